#include "dispsolve/converters.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dispsolve {

template <class Scalar>
Matrix<Scalar> Basis::apply(const Matrix<Scalar>& x, Op op) const {
  switch (kind) {
    case Kind::identity:
      return x;
    case Kind::fourier:
      if constexpr (is_complex_v<Scalar>) {
        return fourier_multiply(x, phi, op);
      } else {
        throw Error(ErrorCode::invalid_argument,
                    "Fourier basis applied to real data");
      }
    case Kind::sine:
      return sine_multiply(x);
    case Kind::cosine:
      return cosine_multiply(x, op);
  }
  return x;
}

template RMatrix Basis::apply(const RMatrix&, Op) const;
template CMatrix Basis::apply(const CMatrix&, Op) const;

namespace {

void require_rhs(Index n, Index rows) {
  if (rows != n)
    throw Error(ErrorCode::invalid_argument,
                "rhs: row count does not match the matrix size");
}

}  // namespace

template <class Scalar>
GeneratorPair<Scalar> toeplitz_generators(const Toeplitz<Scalar>& t) {
  const Index n = t.size();
  GeneratorPair<Scalar> p{Matrix<Scalar>::Zero(n, 2), Matrix<Scalar>::Zero(n, 2)};
  if (n == 0) return p;
  p.g(0, 0) = t.coeff(0);
  p.g(0, 1) = Scalar(1);
  for (Index i = 1; i < n; ++i) p.g(i, 0) = t.coeff(i - n) + t.coeff(i);
  // Built conjugated, conjugated back below.
  for (Index j = 0; j + 1 < n; ++j)
    p.h(j, 1) = t.coeff(n - 1 - j) - t.coeff(-j - 1);
  p.h(n - 1, 0) = Scalar(1);
  p.h(n - 1, 1) = t.coeff(0);
  if constexpr (is_complex_v<Scalar>) p.h = p.h.conjugate().eval();
  return p;
}

template <class Scalar>
GeneratorPair<Scalar> toeplitz_hankel_generators(const ToeplitzHankel<Scalar>& k) {
  const Index n = k.size();
  if (n < 2)
    throw Error(ErrorCode::invalid_argument,
                "toeplitz_hankel: size too small for the generator formulas "
                "(need n >= 2)");
  auto t = [&](Index i) { return k.tc(i); };
  auto h = [&](Index i) { return k.hc(i); };

  Matrix<Scalar> g = Matrix<Scalar>::Zero(n, 4);
  g(0, 0) = t(0) - t(1) + h(0);
  for (Index i = 1; i + 1 < n; ++i) g(i, 0) = t(i) - t(i + 1) + h(i) - h(i - 1);
  g(n - 1, 0) = t(n - 1) + h(n - 1) - h(n - 2);
  g(0, 1) = Scalar(-1);
  g(n - 1, 2) = Scalar(-1);
  g(0, 3) = t(1 - n) + h(n - 1) - h(n);
  for (Index i = 1; i + 1 < n; ++i)
    g(i, 3) = t(i - n + 1) - t(i - n) + h(n - 1 + i) - h(n + i);
  g(n - 1, 3) = t(0) - t(-1) + h(2 * n - 2);

  // Rows of H^*; H is its conjugate transpose.
  Matrix<Scalar> hs = Matrix<Scalar>::Zero(4, n);
  hs(0, 0) = Scalar(-1);
  hs(1, 0) = t(-1);
  for (Index j = 1; j + 1 < n; ++j) hs(1, j) = t(-j - 1) + h(j - 1);
  hs(1, n - 1) = h(n - 2);
  hs(2, 0) = h(n);
  for (Index j = 1; j + 1 < n; ++j) hs(2, j) = t(n - j) + h(n + j);
  hs(2, n - 1) = t(1);
  hs(3, n - 1) = Scalar(-1);
  return {std::move(g), hs.adjoint()};
}

GeneratorPair<cplx> vandermonde_generators(const Vandermonde& w, cplx phi) {
  require_unimodular(phi, "phi");
  const Index n = w.size();
  GeneratorPair<cplx> p{CMatrix(n, 1), CMatrix::Zero(n, 1)};
  const cplx target = std::conj(phi);
  for (Index i = 0; i < n; ++i) {
    const cplx v = int_pow(w.w[i], n) - target;
    if (v == cplx(0)) {
      std::ostringstream os;
      os << "node w[" << i << "] collides with phi (w^n == conj(phi))";
      throw Error(ErrorCode::nonreconstructable, os.str());
    }
    p.g(i, 0) = v;
  }
  if (n > 0) p.h(0, 0) = 1.0;
  return p;
}

cplx default_vandermonde_phase(const CVector& w) {
  constexpr int kGrid = 64;
  const Index n = w.size();
  CVector wn(n);
  for (Index i = 0; i < n; ++i) wn[i] = int_pow(w[i], n);
  cplx best_phi = 1.0;
  double best = -1;
  for (int k = 0; k < kGrid; ++k) {
    const double theta = 2 * std::numbers::pi * k / kGrid;
    const cplx phi = k == 0 ? cplx(1.0) : std::polar(1.0, theta);
    const cplx target = std::conj(phi);
    double m = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) m = std::min(m, std::abs(wn[i] - target));
    if (m > best) {
      best = m;
      best_phi = phi;
    }
  }
  return best_phi;
}

Conversion<cplx> toeplitz_like_to_cauchy(const ToeplitzLike& a, const CMatrix& b) {
  const Index n = a.size();
  require_rhs(n, b.rows());
  require_unimodular(a.xi, "xi");
  require_unimodular(a.eta, "eta");
  if (a.xi == a.eta)
    throw Error(ErrorCode::invalid_argument,
                "xi == eta: the knot sets coincide");
  const Basis u = Basis::fourier(a.xi);
  const Basis v = Basis::fourier(a.eta);
  return {CauchyLike<cplx>(unit_roots(n, a.xi), unit_roots(n, a.eta),
                           u.apply(a.g, Op::adjoint), v.apply(a.h, Op::adjoint)),
          u, v, u.apply(b, Op::adjoint)};
}

Conversion<cplx> toeplitz_to_cauchy(const Toeplitz<cplx>& t, const CMatrix& b) {
  auto p = toeplitz_generators(t);
  return toeplitz_like_to_cauchy(
      ToeplitzLike(std::move(p.g), std::move(p.h), 1.0, -1.0), b);
}

template <class Scalar>
Conversion<Scalar> toeplitz_hankel_like_to_cauchy(
    const ToeplitzHankelLike<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b) {
  const Index n = a.size();
  if (n < 2)
    throw Error(ErrorCode::invalid_argument,
                "toeplitz_hankel: size too small (need n >= 2)");
  require_rhs(n, b.rows());
  Vector<Scalar> t(n), s(n);
  const double pi = std::numbers::pi;
  for (Index k = 0; k < n; ++k) {
    t[k] = 2 * std::cos(double(k + 1) * pi / double(n + 1));
    s[k] = 2 * std::cos(double(k) * pi / double(n));
  }
  const Basis u = Basis::sine();
  const Basis v = Basis::cosine();
  return {CauchyLike<Scalar>(std::move(t), std::move(s), u.apply(a.g),
                             v.apply(a.h, Op::adjoint)),
          u, v, u.apply(b)};
}

template <class Scalar>
Conversion<Scalar> toeplitz_hankel_to_cauchy(const ToeplitzHankel<Scalar>& k,
                                             const std::type_identity_t<Matrix<Scalar>>& b) {
  auto p = toeplitz_hankel_generators(k);
  return toeplitz_hankel_like_to_cauchy(
      ToeplitzHankelLike<Scalar>(std::move(p.g), std::move(p.h)), b);
}

Conversion<cplx> vandermonde_like_to_cauchy(const VandermondeLike& a,
                                            const CMatrix& b) {
  const Index n = a.size();
  require_rhs(n, b.rows());
  require_unimodular(a.phi, "phi");
  const CVector roots = unit_roots(n, a.phi);
  const Basis v = Basis::fourier(a.phi);
  return {CauchyLike<cplx>(a.w, roots.conjugate(), a.g, v.apply(a.h, Op::adjoint)),
          Basis::identity(), v, b};
}

Conversion<cplx> vandermonde_to_cauchy(const Vandermonde& w, const CMatrix& b,
                                       std::optional<cplx> phi) {
  const cplx p = phi ? *phi : default_vandermonde_phase(w.w);
  auto gen = vandermonde_generators(w, p);
  return vandermonde_like_to_cauchy(
      VandermondeLike(w.w, p, std::move(gen.g), std::move(gen.h)), b);
}

template <class Scalar>
Toeplitz<Scalar> hankel_as_toeplitz(const Vector<Scalar>& h) {
  if (h.size() % 2 == 0)
    throw Error(ErrorCode::invalid_argument,
                "hankel: coefficient vector must have length 2n-1");
  const Index n = (h.size() + 1) / 2;
  Vector<Scalar> col(n), row(n);
  for (Index i = 0; i < n; ++i) {
    col[i] = h[n - 1 - i];
    row[i] = h[n - 1 + i];
  }
  return Toeplitz<Scalar>(std::move(col), std::move(row));
}

template GeneratorPair<double> toeplitz_generators(const Toeplitz<double>&);
template GeneratorPair<cplx> toeplitz_generators(const Toeplitz<cplx>&);
template GeneratorPair<double> toeplitz_hankel_generators(
    const ToeplitzHankel<double>&);
template GeneratorPair<cplx> toeplitz_hankel_generators(
    const ToeplitzHankel<cplx>&);
template Conversion<double> toeplitz_hankel_like_to_cauchy(
    const ToeplitzHankelLike<double>&, const RMatrix&);
template Conversion<cplx> toeplitz_hankel_like_to_cauchy(
    const ToeplitzHankelLike<cplx>&, const CMatrix&);
template Conversion<double> toeplitz_hankel_to_cauchy(
    const ToeplitzHankel<double>&, const RMatrix&);
template Conversion<cplx> toeplitz_hankel_to_cauchy(const ToeplitzHankel<cplx>&,
                                                    const CMatrix&);
template Toeplitz<double> hankel_as_toeplitz(const RVector&);
template Toeplitz<cplx> hankel_as_toeplitz(const CVector&);

}  // namespace dispsolve
