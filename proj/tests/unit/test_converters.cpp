#include <catch_amalgamated.hpp>

#include <numbers>

#include "support.hpp"

using namespace testing;
using DO = oracle::DisplacementOperator;

namespace {

constexpr double kPi = std::numbers::pi;

ToeplitzHankel<cplx> to_th(const inst::ToeplitzHankelData& k) {
  return {to_eigen(k.t), to_eigen(k.h)};
}

double min_separation(const CVector& t, const CVector& s) {
  double m = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < t.size(); ++i)
    for (Index j = 0; j < s.size(); ++j) m = std::min(m, std::abs(t[i] - s[j]));
  return m;
}

}  // namespace

TEST_CASE("Toeplitz generators of a scalar", "[converters]") {
  const Toeplitz<cplx> t(CVector::Constant(1, 5.0), CVector::Constant(1, 5.0));
  const auto p = toeplitz_generators(t);
  CHECK(p.g(0, 0) == cplx(5));
  CHECK(p.g(0, 1) == cplx(1));
  CHECK(p.h(0, 0) == cplx(1));
  CHECK(p.h(0, 1) == cplx(5));
  CHECK((p.g * p.h.adjoint())(0, 0) == cplx(10));

  const Toeplitz<cplx> z(CVector::Constant(1, cplx(1, 2)), CVector::Constant(1, cplx(1, 2)));
  const auto q = toeplitz_generators(z);
  CHECK(q.h(0, 1) == cplx(1, -2));
}

TEST_CASE("Toeplitz generators satisfy the displacement equation", "[converters]") {
  CVector e = CVector::Zero(2);
  e[0] = 1.0;
  const Toeplitz<cplx> id(e, e);
  const auto pid = toeplitz_generators(id);
  CHECK(oracle::displacement_residual(DO::shift(1.0), DO::shift(-1.0),
                                      oracle::toeplitz_matrix(id), pid.g, pid.h) <= 1e-14);

  inst::SplitMix64 rng(31);
  for (Index n : {1, 2, 3, 16, 33, 64}) {
    for (bool complex : {false, true}) {
      const auto t = to_toeplitz(inst::random_toeplitz(rng, n, complex));
      const auto p = toeplitz_generators(t);
      const CMatrix a = oracle::toeplitz_matrix(t);
      INFO("n = " << n);
      CHECK(oracle::displacement_residual(DO::shift(1.0), DO::shift(-1.0), a, p.g,
                                          p.h) <= 1e-13 * oracle::norm_inf(a));
    }
  }
}

TEST_CASE("Toeplitz+Hankel generators", "[converters]") {
  const ToeplitzHankel<double> zero(RVector::Zero(7), RVector::Zero(7));
  const auto pz = toeplitz_hankel_generators(zero);
  CHECK((pz.g * pz.h.transpose()).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(toeplitz_hankel_generators(
                      ToeplitzHankel<double>(RVector::Ones(1), RVector::Ones(1))),
                  Error);

  inst::SplitMix64 rng(32);
  for (Index n = 2; n <= 24; ++n) {
    for (bool complex : {false, true}) {
      const auto k = to_th(inst::random_toeplitz_hankel(rng, n, complex));
      const auto p = toeplitz_hankel_generators(k);
      const CMatrix a = oracle::toeplitz_hankel_matrix(k);
      INFO("n = " << n << ", complex = " << complex);
      CHECK(p.g.cols() == 4);
      CHECK(oracle::displacement_residual(DO::tridiagonal(0), DO::tridiagonal(1), a,
                                          p.g, p.h) <= 1e-12 * oracle::norm_inf(a));
    }
  }

  // Pure Toeplitz and pure Hankel.
  for (bool hankel : {false, true}) {
    auto data = inst::random_toeplitz_hankel(rng, 8, false);
    for (auto& v : hankel ? data.t : data.h) v = 0.0;
    const auto k = to_th(data);
    const auto p = toeplitz_hankel_generators(k);
    const CMatrix a = oracle::toeplitz_hankel_matrix(k);
    CHECK(oracle::displacement_residual(DO::tridiagonal(0), DO::tridiagonal(1), a, p.g,
                                        p.h) <= 1e-12 * oracle::norm_inf(a));
  }
}

TEST_CASE("Vandermonde generators", "[converters]") {
  CVector w1(1);
  w1 << 2.0;
  const auto p1 = vandermonde_generators(Vandermonde(w1), 1.0);
  CHECK(p1.g(0, 0) == cplx(1));
  CHECK(oracle::displacement_residual(DO::diagonal(w1), DO::shift_adjoint(1.0),
                                      oracle::vandermonde_matrix(w1), p1.g, p1.h) <= 1e-14);

  CVector w2(2);
  w2 << 2.0, 3.0;
  const auto p2 = vandermonde_generators(Vandermonde(w2), 1.0);
  CHECK(oracle::displacement_residual(DO::diagonal(w2), DO::shift_adjoint(1.0),
                                      oracle::vandermonde_matrix(w2), p2.g, p2.h) <= 1e-13);

  inst::SplitMix64 rng(33);
  for (Index n : {3, 9, 20}) {
    CVector w(n);
    for (Index i = 0; i < n; ++i) w[i] = std::polar(0.5 + rng.uniform(), 6.0 * rng.uniform());
    const cplx phi = std::polar(1.0, 1.3);
    const auto p = vandermonde_generators(Vandermonde(w), phi);
    const CMatrix a = oracle::vandermonde_matrix(w);
    CHECK(oracle::displacement_residual(DO::diagonal(w), DO::shift_adjoint(phi), a, p.g,
                                        p.h) <= 1e-12 * oracle::norm_inf(a));
  }
}

TEST_CASE("Vandermonde collision is against the conjugate phase", "[converters]") {
  const cplx phi = std::polar(1.0, 0.5);
  CHECK_THROWS_AS(vandermonde_generators(Vandermonde(CVector::Constant(1, std::conj(phi))), phi),
                  Error);
  CHECK_NOTHROW(vandermonde_generators(Vandermonde(CVector::Constant(1, phi)), phi));

  // (-1)^3 == conj(-1).
  CVector w(3);
  w << -1.0, 2.0, 3.0;
  CHECK_THROWS_AS(vandermonde_generators(Vandermonde(w), -1.0), Error);
}

TEST_CASE("Toeplitz-like conversion", "[converters]") {
  inst::SplitMix64 rng(34);
  const cplx pairs[][2] = {{1.0, -1.0},
                           {std::polar(1.0, 0.3), std::polar(1.0, -2.0)},
                           {1.0, std::polar(1.0, kPi / 8)}};
  for (Index n : {1, 2, 5, 8, 16}) {
    for (const auto& pr : pairs) {
      const cplx xi = pr[0], eta = pr[1];
      // Any dense A is Toeplitz-like with G = Z_xi A - A Z_eta, H = I.
      const CMatrix a = random_matrix(rng, n, n);
      const CMatrix g = DO::shift(xi).left(a) - DO::shift(eta).right(a);
      const CMatrix b = random_matrix(rng, n, 2);
      const auto conv = toeplitz_like_to_cauchy(
          ToeplitzLike(g, CMatrix::Identity(n, n), xi, eta), b);
      const CMatrix fx = oracle::fourier_matrix(n, xi);
      const CMatrix fe = oracle::fourier_matrix(n, eta);
      const CMatrix ref = fx.adjoint() * a * fe;
      INFO("n = " << n);
      CHECK(oracle::norm_inf(to_dense(conv.cauchy) - ref) <= 1e-12 * n * oracle::norm_inf(a));
      CHECK(oracle::norm_inf(conv.rhs - fx.adjoint() * b) <= 1e-12 * n * oracle::norm_inf(b));
      CHECK(conv.cauchy.t().isApprox(unit_roots(n, xi)));
      CHECK(conv.cauchy.s().isApprox(unit_roots(n, eta)));
    }
  }
  CHECK_THROWS_AS(toeplitz_like_to_cauchy(
                      ToeplitzLike(CMatrix::Ones(3, 1), CMatrix::Ones(3, 1), 1.0, 1.0),
                      CMatrix::Ones(3, 1)),
                  Error);
  const CMatrix one = CMatrix::Constant(1, 1, 3.0);
  const auto c1 = toeplitz_like_to_cauchy(
      ToeplitzLike(one * cplx(2), CMatrix::Ones(1, 1), 1.0, -1.0), one);
  CHECK(std::abs(to_dense(c1.cauchy)(0, 0) - cplx(3)) < 1e-15);  // (1 - (-1)) a = 6
}

TEST_CASE("knot separation of the default Toeplitz-like pair", "[converters]") {
  for (Index n : {1, 2, 3, 8, 64, 257}) {
    const double sep = min_separation(unit_roots(n, 1.0), unit_roots(n, -1.0));
    INFO("n = " << n);
    CHECK(std::abs(sep - 2 * std::sin(kPi / (2 * n))) <= 1e-13);
  }
  // eta = e^{i pi / n} only rotates the knots by pi / n^2.
  for (Index n : {2, 8, 64}) {
    const double sep =
        min_separation(unit_roots(n, 1.0), unit_roots(n, std::polar(1.0, kPi / n)));
    CHECK(std::abs(sep - 2 * std::sin(kPi / (2.0 * n * n))) <= 1e-13);
  }
}

TEST_CASE("Toeplitz conversion", "[converters]") {
  inst::SplitMix64 rng(35);
  const Toeplitz<cplx> t1(CVector::Constant(1, 4.0), CVector::Constant(1, 4.0));
  const auto c1 = toeplitz_to_cauchy(t1, CMatrix::Constant(1, 1, 8.0));
  const auto r1 = solve_cauchy_like(c1.cauchy, c1.rhs);
  CHECK(std::abs(c1.recover(r1.x)(0, 0) - cplx(2)) < 1e-15);

  const Index n = 16;
  const auto t = to_toeplitz(inst::random_toeplitz(rng, n, true));
  const CMatrix b = random_matrix(rng, n, 1);
  const auto conv = toeplitz_to_cauchy(t, b);
  const CMatrix a = oracle::toeplitz_matrix(t);
  const CMatrix ref = oracle::fourier_matrix(n, 1.0).adjoint() * a *
                      oracle::fourier_matrix(n, -1.0);
  CHECK(oracle::norm_inf(to_dense(conv.cauchy) - ref) <= 1e-12 * n * oracle::norm_inf(a));
  CHECK(conv.cauchy.t() == unit_roots(n, 1.0));
  CHECK(conv.cauchy.s() == unit_roots(n, -1.0));
  CHECK(conv.cauchy.rank() == 2);
}

TEST_CASE("Toeplitz+Hankel conversion", "[converters]") {
  for (Index n = 2; n <= 300; ++n) {
    const auto c = toeplitz_hankel_to_cauchy(
        ToeplitzHankel<double>(RVector::Ones(2 * n - 1), RVector::Zero(2 * n - 1)),
        RMatrix(RMatrix::Zero(n, 1)));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) REQUIRE(c.cauchy.t()[i] != c.cauchy.s()[j]);
  }

  inst::SplitMix64 rng(36);
  for (Index n : {2, 4, 7, 40, 64, 65, 100}) {
    const auto data = inst::random_toeplitz_hankel(rng, n, false);
    const ToeplitzHankel<double> k(to_eigen(data.t).real(), to_eigen(data.h).real());
    const RMatrix b = random_real(rng, n, 2);
    const Conversion<double> conv = toeplitz_hankel_to_cauchy(k, b);
    const RMatrix a = oracle::toeplitz_hankel_matrix(k);
    const RMatrix s = oracle::sine_matrix(n), c = oracle::cosine_matrix(n);
    const double scale = n * oracle::norm_inf(a);
    INFO("n = " << n);
    CHECK(oracle::norm_inf(to_dense(conv.cauchy) - s * a * c) <= 1e-12 * scale);
    CHECK(oracle::norm_inf(conv.rhs - s * b) <= 1e-12 * n * oracle::norm_inf(b));
    for (Index i = 0; i < n; ++i) {
      CHECK(conv.cauchy.t()[i] == Catch::Approx(2 * std::cos((i + 1) * kPi / (n + 1))));
      CHECK(conv.cauchy.s()[i] == Catch::Approx(2 * std::cos(i * kPi / n)));
    }
  }
  CHECK_THROWS_AS(toeplitz_hankel_to_cauchy(
                      ToeplitzHankel<double>(RVector::Ones(1), RVector::Ones(1)),
                      RMatrix(RMatrix::Ones(1, 1))),
                  Error);
}

TEST_CASE("Vandermonde conversion", "[converters]") {
  const auto c1 = vandermonde_to_cauchy(Vandermonde(CVector::Constant(1, 2.0)),
                                        CMatrix::Ones(1, 1), cplx(1.0));
  CHECK(std::abs(to_dense(c1.cauchy)(0, 0) - cplx(1)) < 1e-15);

  inst::SplitMix64 rng(37);
  for (Index n : {2, 8, 30, 64}) {
    CVector w(n);
    for (Index i = 0; i < n; ++i) w[i] = std::polar(0.9 * rng.uniform(), 6.28 * rng.uniform());
    const CMatrix b = random_matrix(rng, n, 1);
    for (cplx phi : {cplx(1.0), std::polar(1.0, 2.0)}) {
      const auto conv = vandermonde_to_cauchy(Vandermonde(w), b, phi);
      const CMatrix a = oracle::vandermonde_matrix(w);
      const CMatrix ref = a * oracle::fourier_matrix(n, phi);
      INFO("n = " << n);
      CHECK(oracle::norm_inf(to_dense(conv.cauchy) - ref) <= 1e-12 * n * oracle::norm_inf(a));
      CHECK(conv.rhs == b);
      CHECK(conv.cauchy.s().isApprox(unit_roots(n, phi).conjugate()));
    }
  }
}

TEST_CASE("default Vandermonde phase", "[converters]") {
  // w^n = 1 for roots of unity; the farthest grid phase is -1.
  const cplx p = default_vandermonde_phase(unit_roots(8, 1.0));
  CHECK(std::abs(p - cplx(-1)) < 1e-15);
  // Empty node set: every candidate ties, the first wins.
  CHECK(default_vandermonde_phase(CVector(0)) == cplx(1));
  // w^n = e^{-0.3i} is avoided by conj(phi) rather than phi.
  const CVector w = unit_roots(4, std::polar(1.0, -0.3));
  const cplx q = default_vandermonde_phase(w);
  double best = 0;
  for (int k = 0; k < 64; ++k) {
    const cplx cand = std::polar(1.0, 2 * kPi * k / 64);
    best = std::max(best, std::abs(std::polar(1.0, -0.3) - std::conj(cand)));
  }
  CHECK(std::abs(std::polar(1.0, -0.3) - std::conj(q)) == Catch::Approx(best));
}

TEST_CASE("converted systems recover the original solution", "[converters]") {
  inst::SplitMix64 rng(38);
  for (Index n : {3, 17, 64}) {
    const CMatrix b = random_matrix(rng, n, 1);

    const auto t = to_toeplitz(inst::random_toeplitz(rng, n, true));
    const auto ct = toeplitz_to_cauchy(t, b);
    const CMatrix xt = ct.recover(oracle::dense_solve(to_dense(ct.cauchy), ct.rhs));
    CHECK(rel_err(xt, oracle::dense_solve(oracle::toeplitz_matrix(t), b)) <= 1e-10);

    const auto k = to_th(inst::random_toeplitz_hankel(rng, n, true));
    const auto ck = toeplitz_hankel_to_cauchy(k, b);
    const CMatrix xk = ck.recover(oracle::dense_solve(to_dense(ck.cauchy), ck.rhs));
    CHECK(rel_err(xk, oracle::dense_solve(oracle::toeplitz_hankel_matrix(k), b)) <= 1e-10);

    const CVector w = to_eigen(inst::unit_circle_nodes(rng, n));
    const auto cv = vandermonde_to_cauchy(Vandermonde(w), b);
    const CMatrix xv = cv.recover(oracle::dense_solve(to_dense(cv.cauchy), cv.rhs));
    CHECK(rel_err(xv, oracle::dense_solve(oracle::vandermonde_matrix(w), b)) <= 1e-10);
  }
}

TEST_CASE("bases are unitary", "[converters]") {
  inst::SplitMix64 rng(39);
  const CMatrix x = random_matrix(rng, 20, 2);
  for (const Basis& b : {Basis::identity(), Basis::fourier(std::polar(1.0, 0.4)),
                         Basis::sine(), Basis::cosine()}) {
    CHECK(oracle::norm_inf(b.apply(b.apply(x), Op::adjoint) - x) <= 1e-12);
  }
  CHECK_THROWS_AS(Basis::fourier(1.0).apply(RMatrix(RMatrix::Ones(2, 1))), Error);
}

TEST_CASE("Hankel systems through row reversal", "[converters]") {
  inst::SplitMix64 rng(40);
  const Index n = 9;
  const CVector h = random_matrix(rng, 2 * n - 1, 1).col(0);
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = h[i + j];
  const Toeplitz<cplx> t = hankel_as_toeplitz(h);
  CHECK(oracle::toeplitz_matrix(t) == reverse_rows(a));
  const CMatrix b = random_matrix(rng, n, 1);
  const auto rep = solve_toeplitz(t, reverse_rows(b));
  CHECK(rel_err(rep.x, oracle::dense_solve(a, b)) <= 1e-9);
}
