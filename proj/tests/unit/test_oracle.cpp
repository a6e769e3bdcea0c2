#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;
using Catch::Approx;
using DO = oracle::DisplacementOperator;

TEST_CASE("dense solve examples", "[oracle]") {
  const CMatrix b = CMatrix::Random(3, 2);
  CHECK(oracle::dense_solve(CMatrix(CMatrix::Identity(3, 3)), b) == b);

  RMatrix a(2, 2);
  a << 2, 0, 0, 4;
  RMatrix rb(2, 1);
  rb << 2, 4;
  const RMatrix x = oracle::dense_solve(a, rb);
  CHECK(x(0, 0) == 1.0);
  CHECK(x(1, 0) == 1.0);

  try {
    oracle::dense_solve(RMatrix(RMatrix::Zero(2, 2)), rb);
    FAIL("expected singular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular);
  }
  CHECK_THROWS_AS(oracle::dense_solve(a, RMatrix(RMatrix::Ones(3, 1))), Error);
}

TEST_CASE("dense condition number examples", "[oracle]") {
  CHECK(oracle::dense_cond1(RMatrix(RMatrix::Identity(4, 4))) == Approx(1.0));
  RMatrix d = RMatrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = 10;
  CHECK(oracle::dense_cond1(d) == Approx(10.0));
  RMatrix h(2, 2);
  h << 1, 0.5, 0.5, 1.0 / 3;
  CHECK(oracle::dense_cond1(h) == Approx(27.0).epsilon(1e-12));
  CHECK(std::isinf(oracle::dense_cond1(RMatrix(RMatrix::Zero(3, 3)))));
}

TEST_CASE("dense Schur complement example", "[oracle]") {
  RMatrix a(2, 2);
  a << 2, 1, 4, 3;
  const RMatrix s = oracle::dense_schur_complement(a, 1);
  REQUIRE(s.rows() == 1);
  CHECK(s(0, 0) == Approx(1.0));
}

TEST_CASE("displacement operators", "[oracle]") {
  const CMatrix a = CMatrix::Random(4, 4);
  // Z_phi A shifts rows down and wraps the last row, scaled by phi.
  const cplx phi(0, 1);
  const CMatrix za = DO::shift(phi).left(a);
  CHECK(za.row(0) == phi * a.row(3));
  CHECK(za.row(1) == a.row(0));
  CHECK(za.row(3) == a.row(2));
  // Dense check of both products against an explicit operator matrix.
  CMatrix z = CMatrix::Zero(4, 4);
  for (Index i = 1; i < 4; ++i) z(i, i - 1) = 1;
  z(0, 3) = phi;
  CHECK(oracle::norm_inf(DO::shift(phi).right(a) - a * z) <= 1e-15);
  CHECK(oracle::norm_inf(DO::shift_adjoint(phi).left(a) - z.adjoint() * a) <= 1e-15);

  CMatrix y = CMatrix::Zero(4, 4);
  for (Index i = 0; i + 1 < 4; ++i) y(i, i + 1) = y(i + 1, i) = 1;
  y(0, 0) = y(3, 3) = 1;
  CHECK(oracle::norm_inf(DO::tridiagonal(1).left(a) - y * a) <= 1e-15);
  CHECK(oracle::norm_inf(DO::tridiagonal(1).right(a) - a * y) <= 1e-15);

  CVector d(4);
  d << 1, 2, 3, 4;
  CHECK(oracle::norm_inf(DO::diagonal(d).left(a) - d.asDiagonal() * a) == 0.0);
}

TEST_CASE("displacement residual examples", "[oracle]") {
  // A Cauchy matrix satisfies D_t C - C D_s = 1 1^*.
  CVector t(3), s(3);
  t << 1, 2, 3;
  s << -1, -2, -3;
  const CauchyLike<cplx> c(t, s, CMatrix::Ones(3, 1), CMatrix::Ones(3, 1));
  CHECK(oracle::displacement_residual(DO::diagonal(t), DO::diagonal(s), to_dense(c),
                                      CMatrix::Ones(3, 1), CMatrix::Ones(3, 1)) <= 1e-15);
  CHECK(oracle::displacement_residual(DO::diagonal(t), DO::diagonal(s), to_dense(c),
                                      CMatrix::Zero(3, 1), CMatrix::Ones(3, 1)) ==
        Approx(3.0).epsilon(1e-14));
}

TEST_CASE("dense transform matrices", "[oracle]") {
  CMatrix f2(2, 2);
  f2 << 1, 1, 1, -1;
  CHECK(oracle::norm_inf(oracle::dft_matrix(2) - f2) <= 1e-15);
  CHECK(oracle::norm_inf(oracle::fourier_matrix(2, 1.0) - f2 / std::sqrt(2.0)) <= 1e-15);
  for (Index n : {1, 5, 8}) {
    const RMatrix s = oracle::sine_matrix(n);
    const RMatrix c = oracle::cosine_matrix(n);
    CHECK(oracle::norm_inf(s * s.transpose() - RMatrix::Identity(n, n)) <= 1e-14);
    CHECK(oracle::norm_inf(c * c.transpose() - RMatrix::Identity(n, n)) <= 1e-14);
  }
}

TEST_CASE("dense structured matrices", "[oracle]") {
  CVector col(3), row(3);
  col << 1, 2, 3;
  row << 1, 4, 5;
  const CMatrix t = oracle::toeplitz_matrix(Toeplitz<cplx>(col, row));
  CMatrix expect(3, 3);
  expect << 1, 4, 5, 2, 1, 4, 3, 2, 1;
  CHECK(t == expect);

  RVector tv(3), hv(3);
  tv << 7, 1, 8;  // t_{-1}, t_0, t_1
  hv << 1, 2, 3;  // h_0, h_1, h_2
  const RMatrix k = oracle::toeplitz_hankel_matrix(ToeplitzHankel<double>(tv, hv));
  RMatrix ke(2, 2);
  ke << 1 + 1, 7 + 2, 8 + 2, 1 + 3;
  CHECK(k == ke);

  CVector w(2);
  w << 2, 3;
  CMatrix ve(2, 2);
  ve << 2, 1, 3, 1;
  CHECK(oracle::vandermonde_matrix(w) == ve);
}
