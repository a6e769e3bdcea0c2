#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

TEST_CASE("gather plan groups equal knots by first appearance", "[gather]") {
  RVector s(5);
  s << 5, 3, 5, 3, 3;
  const GatherPlan p = build_gather_plan(s);
  CHECK(p.perm == std::vector<Index>{0, 2, 1, 3, 4});
  CHECK(p.alpha == std::vector<Index>{0, 0, 2, 2, 2});
  CHECK(p.omega == std::vector<Index>{1, 1, 4, 4, 4});
  CHECK(p.multiplicity == std::vector<Index>{2, 3});
  CHECK(p.distinct == 2);
  CHECK(p.max_multiplicity() == 3);
  CHECK_FALSE(p.trivial());
}

TEST_CASE("gather plan of distinct knots is the identity", "[gather]") {
  const GatherPlan p = build_gather_plan(RVector(RVector::LinSpaced(6, 0, 5)));
  CHECK(p.trivial());
  for (Index k = 0; k < 6; ++k) {
    CHECK(p.perm[k] == k);
    CHECK(p.alpha[k] == k);
    CHECK(p.omega[k] == k);
  }
}

TEST_CASE("gather plan of one repeated value", "[gather]") {
  const GatherPlan p = build_gather_plan(CVector(CVector::Constant(4, cplx(1, 2))));
  CHECK(p.distinct == 1);
  CHECK(p.alpha == std::vector<Index>(4, 0));
  CHECK(p.omega == std::vector<Index>(4, 3));
}

TEST_CASE("gather plan treats signed zeros as equal", "[gather]") {
  RVector s(2);
  s << 0.0, -0.0;
  CHECK(build_gather_plan(s).distinct == 1);
}

TEST_CASE("gather plan invariants on random multisets", "[gather]") {
  inst::SplitMix64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + Index(rng.next() % 40);
    RVector s(n);
    for (Index i = 0; i < n; ++i) s[i] = double(rng.next() % 7);
    const GatherPlan p = build_gather_plan(s);
    Index total = 0;
    for (Index m : p.multiplicity) total += m;
    CHECK(total == n);
    std::vector<Index> sorted = p.perm;
    std::sort(sorted.begin(), sorted.end());
    for (Index k = 0; k < n; ++k) {
      CHECK(sorted[k] == k);
      CHECK(p.alpha[k] <= k);
      CHECK(k <= p.omega[k]);
      for (Index j = p.alpha[k]; j <= p.omega[k]; ++j) CHECK(s[p.perm[j]] == s[p.perm[k]]);
    }
    for (Index k = 1; k < n; ++k)
      if (p.alpha[k] != p.alpha[k - 1]) CHECK(s[p.perm[k]] != s[p.perm[k - 1]]);
  }
}

TEST_CASE("collapsing knots", "[gather]") {
  RVector s(3);
  s << 1, 1 + 1e-14, 2;
  const RVector c = collapse_knots(s, 1e-12);
  CHECK(c[0] == 1.0);
  CHECK(c[1] == 1.0);
  CHECK(c[2] == 2.0);

  CHECK(collapse_knots(s, 0.0) == s);
  CHECK_THROWS_AS(collapse_knots(s, -1.0), Error);

  const double tol = 1e-6;
  RVector chain(3);
  chain << 0, 0.9 * tol, 1.8 * tol;
  CHECK(collapse_knots(chain, tol) == RVector::Zero(3));

  CVector z(3);
  z << cplx(1, 0), cplx(1, 1e-9), cplx(0, 1);
  const CVector cz = collapse_knots(z, 1e-8);
  CHECK(cz[1] == cplx(1, 0));
  CHECK(cz[2] == cplx(0, 1));
}
