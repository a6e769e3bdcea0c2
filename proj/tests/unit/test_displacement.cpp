#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;
using Catch::Approx;
using DO = oracle::DisplacementOperator;

namespace {

CauchyLike<double> hilbert2() {
  RVector t(2), s(2);
  t << 1, 2;
  s << 0, -1;
  return {t, s, RMatrix::Ones(2, 1), RMatrix::Ones(2, 1)};
}

}  // namespace

TEST_CASE("entry of a 1x1 Cauchy-like matrix", "[displacement]") {
  const CauchyLike<double> c(RVector::Constant(1, 2), RVector::Constant(1, 0),
                             RMatrix::Constant(1, 1, 3), RMatrix::Constant(1, 1, 4));
  CHECK(c.entry(0, 0) == 6.0);
  CHECK(to_dense(c)(0, 0) == 6.0);
}

TEST_CASE("unit generators give the Hilbert matrix", "[displacement]") {
  const RMatrix a = to_dense(hilbert2());
  CHECK(a(0, 0) == 1.0);
  CHECK(a(0, 1) == 0.5);
  CHECK(a(1, 0) == 0.5);
  CHECK(a(1, 1) == Approx(1.0 / 3).epsilon(1e-16));
}

TEST_CASE("entry uses the conjugate of the right generator", "[displacement]") {
  CMatrix g(1, 1), h(1, 1);
  g(0, 0) = cplx(0, 1);
  h(0, 0) = cplx(0, 1);
  const CauchyLike<cplx> c(CVector::Constant(1, 1.0), CVector::Constant(1, 0.0), g, h);
  CHECK(std::abs(c.entry(0, 0) - cplx(1)) < 1e-16);
}

TEST_CASE("dense matrix satisfies the displacement equation", "[displacement]") {
  inst::SplitMix64 rng(21);
  for (auto [n, r] : {std::pair<Index, Index>{6, 3}, {8, 2}, {20, 5}}) {
    const auto c = to_cauchy(inst::random_cauchy(rng, n, r));
    const CMatrix a = to_dense(c);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) CHECK(a(i, j) == c.entry(i, j));
    const double res = oracle::displacement_residual(
        DO::diagonal(c.t()), DO::diagonal(c.s()), a, c.g(), c.h());
    const double scale = std::max(oracle::norm_inf(c.g() * c.h().adjoint()), 1.0);
    CHECK(res <= 1e-12 * scale);
  }
}

TEST_CASE("collisions are nonreconstructable", "[displacement]") {
  const CauchyLike<double> c(RVector::Constant(2, 1.0), RVector::LinSpaced(2, 0, 1),
                             RMatrix::Ones(2, 1), RMatrix::Ones(2, 1));
  CHECK(c.entry(0, 0) == 1.0);
  try {
    c.entry(0, 1);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::nonreconstructable);
    CHECK(std::string(e.what()).find("nonreconstructable entry") != std::string::npos);
  }
  CHECK_THROWS_AS(to_dense(c), Error);
}

TEST_CASE("generator shapes are checked at construction", "[displacement]") {
  CHECK_THROWS_WITH(CauchyLike<double>(RVector::Zero(2), RVector::Ones(2),
                                       RMatrix::Ones(2, 2), RMatrix::Ones(2, 1)),
                    Catch::Matchers::ContainsSubstring("G/H"));
  CHECK_THROWS_AS(CauchyLike<double>(RVector::Zero(3), RVector::Ones(2),
                                     RMatrix::Ones(2, 1), RMatrix::Ones(2, 1)),
                  Error);
  CHECK_THROWS_AS(Toeplitz<double>(RVector::Ones(2), RVector::Zero(2)), Error);
  CHECK_THROWS_AS(Toeplitz<double>(RVector::Ones(2), RVector::Ones(3)), Error);
  CHECK_THROWS_AS(ToeplitzHankel<double>(RVector::Ones(4), RVector::Ones(4)), Error);
}

TEST_CASE("Cauchy-like products", "[displacement]") {
  RMatrix e1 = RMatrix::Zero(2, 1);
  e1(0, 0) = 1;
  const RMatrix y = multiply(hilbert2(), e1);
  CHECK(y(0, 0) == 1.0);
  CHECK(y(1, 0) == 0.5);

  inst::SplitMix64 rng(22);
  const auto c = to_cauchy(inst::random_cauchy(rng, 16, 3));
  CHECK(multiply(c, CMatrix(CMatrix::Zero(16, 2))).cwiseAbs().maxCoeff() == 0.0);
  const CMatrix v = random_matrix(rng, 16, 3);
  const CMatrix ref = to_dense(c) * v;
  CHECK(oracle::norm_inf(multiply(c, v) - ref) <= 1e-12 * 16 * oracle::norm_inf(v) *
                                                      oracle::norm_inf(to_dense(c)));

  const CauchyLike<double> rect(RVector::LinSpaced(3, 1, 3), RVector::LinSpaced(2, -2, -1),
                                RMatrix::Ones(3, 1), RMatrix::Ones(2, 1));
  CHECK(multiply(rect, RMatrix(RMatrix::Ones(2, 1))).rows() == 3);
}

TEST_CASE("Toeplitz products", "[displacement]") {
  RVector col(2), row(2);
  col << 1, 3;
  row << 1, 2;
  const RMatrix y = multiply(Toeplitz<double>(col, row), RMatrix(RMatrix::Ones(2, 1)));
  CHECK(y(0, 0) == Approx(3.0).epsilon(1e-14));
  CHECK(y(1, 0) == Approx(4.0).epsilon(1e-14));

  RVector e = RVector::Zero(5);
  e[0] = 1;
  inst::SplitMix64 rng(23);
  const RMatrix v = random_real(rng, 5, 2);
  CHECK((multiply(Toeplitz<double>(e, e), v) - v).cwiseAbs().maxCoeff() <= 1e-15);

  for (Index n : {1, 2, 7, 32, 100, 512}) {
    const auto t = to_toeplitz(inst::random_toeplitz(rng, n, true));
    const CMatrix x = random_matrix(rng, n, 2);
    const CMatrix a = oracle::toeplitz_matrix(t);
    INFO("n = " << n);
    CHECK(oracle::norm_inf(multiply(t, x) - a * x) <=
          1e-12 * n * oracle::norm_inf(a) * oracle::norm_inf(x));
  }
}

TEST_CASE("validation reports without throwing", "[displacement]") {
  RVector t(2), s(2);
  t << 1, 4;
  s << 0, 1;
  const CauchyLike<double> hit(t, s, RMatrix::Ones(2, 1), RMatrix::Ones(2, 1));
  const Diagnostics d = validate(hit);
  REQUIRE(d.issues.size() == 1);
  CHECK(d.issues[0].kind == Issue::Kind::knot_collision);
  CHECK(d.issues[0].i == 0);
  CHECK(d.issues[0].j == 1);

  RVector s3(3);
  s3 << 5, 3, 5;
  const CauchyLike<double> rep(RVector::LinSpaced(3, 10, 12), s3, RMatrix::Ones(3, 1),
                               RMatrix::Ones(3, 1));
  const Diagnostics m = validate(rep);
  REQUIRE(m.has(Issue::Kind::multiplicity));
  CHECK(m.issues[0].j == 2);
  CHECK(m.summary().find("repeated 2 times") != std::string::npos);

  inst::SplitMix64 rng(24);
  CHECK(validate(to_cauchy(inst::random_cauchy(rng, 12, 2))).clean());

  RVector near_s(1);
  near_s << 1.0 + 1e-15;
  const CauchyLike<double> near(RVector::Ones(1), near_s, RMatrix::Ones(1, 1),
                                RMatrix::Ones(1, 1));
  CHECK(validate(near).has(Issue::Kind::near_collision));
}

TEST_CASE("validation of the other classes", "[displacement]") {
  CVector w(3);
  w << 1.0, 2.0, 1.0;
  const Diagnostics d = validate(Vandermonde(w));
  REQUIRE(d.has(Issue::Kind::repeated_node));
  CHECK(d.issues[0].i == 0);
  CHECK(d.issues[0].j == 2);

  CVector w2(2);
  w2 << cplx(0, 1), 2.0;  // i^2 = -1 = conj(-1)
  const VandermondeLike vl(w2, -1.0, CMatrix::Ones(2, 1), CMatrix::Ones(2, 1));
  CHECK(validate(vl).has(Issue::Kind::parameter_clash));

  const ToeplitzLike same(CMatrix::Ones(2, 1), CMatrix::Ones(2, 1), 1.0, 1.0);
  CHECK(validate(same).has(Issue::Kind::parameter_clash));
  const ToeplitzLike off(CMatrix::Ones(2, 1), CMatrix::Ones(2, 1), 2.0, -1.0);
  CHECK(validate(off).has(Issue::Kind::not_unimodular));
  CHECK(validate(ToeplitzLike(CMatrix::Ones(2, 1), CMatrix::Ones(2, 1))).clean());
}

TEST_CASE("reciprocal generator scaling leaves entries unchanged", "[displacement]") {
  inst::SplitMix64 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = to_cauchy(inst::random_cauchy(rng, 10, 3));
    const cplx k = std::polar(1.0, 6.28 * rng.uniform());
    const CauchyLike<cplx> scaled(c.t(), c.s(), c.g() * k, c.h() / std::conj(k));
    const CMatrix a = to_dense(c), b = to_dense(scaled);
    CHECK(((a - b).array().abs() / a.array().abs()).maxCoeff() <= 1e-13);
  }
}
