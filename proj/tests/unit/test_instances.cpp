#include <catch_amalgamated.hpp>

#include <numbers>

#include "support.hpp"

using namespace testing;

TEST_CASE("SplitMix64 reference stream", "[instances]") {
  inst::SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("uniform and normal draws", "[instances]") {
  inst::SplitMix64 rng(1);
  double sum = 0, sq = 0;
  const int m = 20000;
  for (int i = 0; i < m; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < m; ++i) {
    const double z = rng.normal();
    REQUIRE(std::isfinite(z));
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / m) < 0.05);
  CHECK(std::abs(sq / m - 1.0) < 0.05);
}

TEST_CASE("instances are deterministic per seed", "[instances]") {
  inst::SplitMix64 a(7), b(7), c(8);
  const auto x = inst::random_cauchy(a, 10, 2);
  const auto y = inst::random_cauchy(b, 10, 2);
  const auto z = inst::random_cauchy(c, 10, 2);
  CHECK(x.g.data == y.g.data);
  CHECK(x.h.data == y.h.data);
  CHECK(x.g.data != z.g.data);
}

TEST_CASE("generated Cauchy-like instances validate cleanly", "[instances]") {
  inst::SplitMix64 rng(9);
  for (Index n : {1, 4, 33}) {
    CHECK(validate(to_cauchy(inst::random_cauchy(rng, n, 3))).clean());
    CHECK(validate(to_real_cauchy(inst::random_real_cauchy(rng, n, 2))).clean());
  }
}

TEST_CASE("Hilbert instance", "[instances]") {
  const CMatrix h = to_dense(to_cauchy(inst::hilbert(4)));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) CHECK(std::abs(h(i, j) - 1.0 / double(i + j + 1)) <= 1e-16);
}

TEST_CASE("Gaussian Toeplitz instance", "[instances]") {
  const auto t = inst::gaussian_toeplitz(5, 0.3);
  const double c = std::sqrt(0.3 / (2 * std::numbers::pi));
  CHECK(std::abs(t.col[0] - c) <= 1e-16);
  CHECK(std::abs(t.col[2] - c * std::exp(-0.3 * 2)) <= 1e-16);
  CHECK(t.row[2] == t.col[2]);
}

TEST_CASE("Sweet-Brent pairs represent the same matrix", "[instances]") {
  const auto a = to_dense(to_cauchy(inst::sweet_brent(16, 1e-3, false)));
  const auto b = to_dense(to_cauchy(inst::sweet_brent(16, 1e-3, true)));
  // The classic pair cancels to relative accuracy eps / tau.
  CHECK(oracle::norm_inf(a - b) <= 1e-11 * oracle::norm_inf(b));
}

TEST_CASE("Toeplitz generators of the instance library agree with the library", "[instances]") {
  inst::SplitMix64 rng(10);
  const auto td = inst::random_toeplitz(rng, 12, true);
  const auto tl = inst::toeplitz_generators(td);
  const auto lib = toeplitz_generators(to_toeplitz(td));
  CHECK(oracle::norm_inf(to_eigen(tl.g) * to_eigen(tl.h).adjoint() - lib.g * lib.h.adjoint()) <=
        1e-13);
}

TEST_CASE("rank-deficient Toeplitz-like family", "[instances]") {
  inst::SplitMix64 rng(11);
  const Index n = 24;
  const auto exact = inst::deficient_toeplitz_like(rng, n, 3, 0.0);
  const ToeplitzLike tl(to_eigen(exact.g), to_eigen(exact.h), exact.xi, exact.eta);
  const auto conv = toeplitz_like_to_cauchy(tl, CMatrix::Zero(n, 1));
  const Eigen::JacobiSVD<CMatrix> svd(to_dense(conv.cauchy));
  const RVector sv = svd.singularValues();
  CHECK(sv[n - 4] > 1e-8 * sv[0]);
  CHECK(sv[n - 3] <= 1e-9 * sv[0]);
}

TEST_CASE("clustered knots", "[instances]") {
  inst::SplitMix64 rng(12);
  const auto c = inst::clustered_knots(rng, 4, 3, 3, 1e-6);
  REQUIRE(c.s.size() == 12);
  const auto exact = inst::clustered_knots(rng, 4, 3, 3, 0.0);
  const auto plan = build_gather_plan(to_eigen(exact.s));
  CHECK(plan.distinct == 4);
  CHECK(plan.max_multiplicity() == 3);
  // Copies sit within tau of their cluster centre.
  const auto collapsed = collapse_knots(to_eigen(c.s), 1e-5);
  CHECK(build_gather_plan(collapsed).distinct == 4);
}

TEST_CASE("roots helper", "[instances]") {
  const auto r = inst::roots_of(4, -1.0);
  for (const auto& z : r) CHECK(std::abs(std::pow(z, 4) + 1.0) <= 1e-15);
  CHECK(std::abs(r[0] - std::polar(1.0, std::numbers::pi / 4)) <= 1e-16);
}
