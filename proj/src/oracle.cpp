#include "dispsolve/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dispsolve::oracle {

template <class Scalar>
Matrix<Scalar> dense_solve(const Matrix<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::invalid_argument, "dense_solve: matrix is not square");
  if (b.rows() != a.rows())
    throw Error(ErrorCode::invalid_argument, "dense_solve: dimension mismatch");
  if (a.rows() == 0) return Matrix<Scalar>(0, b.cols());
  Eigen::PartialPivLU<Matrix<Scalar>> lu(a);
  const auto& f = lu.matrixLU();
  for (Index k = 0; k < f.rows(); ++k)
    if (f(k, k) == Scalar(0))
      throw Error(ErrorCode::singular, "singular matrix: zero pivot column");
  return lu.solve(b);
}

template <class Scalar>
double dense_cond1(const Matrix<Scalar>& a) {
  const Index n = a.rows();
  if (n == 0) return 1.0;
  Matrix<Scalar> inv;
  try {
    inv = dense_solve(a, Matrix<Scalar>(Matrix<Scalar>::Identity(n, n)));
  } catch (const Error&) {
    return std::numeric_limits<double>::infinity();
  }
  const double na = a.cwiseAbs().colwise().sum().maxCoeff();
  const double ni = inv.cwiseAbs().colwise().sum().maxCoeff();
  const double c = na * ni;
  return std::isfinite(c) ? c : std::numeric_limits<double>::infinity();
}

template <class Scalar>
Matrix<Scalar> dense_schur_complement(const Matrix<Scalar>& a, Index p) {
  if (p == 0) return a;
  const Index m = a.rows() - p, n = a.cols() - p;
  const Matrix<Scalar> x = dense_solve(Matrix<Scalar>(a.topLeftCorner(p, p)),
                                       Matrix<Scalar>(a.topRightCorner(p, n)));
  return a.bottomRightCorner(m, n) - a.bottomLeftCorner(m, p) * x;
}

namespace {

// M A, or M^T A when `transposed` is set.
CMatrix apply_left(const DisplacementOperator& op, const CMatrix& a,
                   bool transposed) {
  using Kind = DisplacementOperator::Kind;
  const Index n = a.rows();
  CMatrix out = CMatrix::Zero(n, a.cols());
  if (n == 0) return out;
  switch (op.kind) {
    case Kind::diagonal:
      if (op.d.size() != n)
        throw Error(ErrorCode::invalid_argument, "diagonal operator size");
      for (Index i = 0; i < n; ++i) out.row(i) = op.d[i] * a.row(i);
      break;
    case Kind::shift:
    case Kind::shift_adjoint: {
      // Z_phi^T and (Z_phi^*)^T = Z_{conj phi} reduce to the two shapes below.
      const bool down = (op.kind == Kind::shift) != transposed;
      cplx corner = op.param;
      if (op.kind == Kind::shift_adjoint) corner = std::conj(corner);
      if (down) {
        for (Index i = 1; i < n; ++i) out.row(i) = a.row(i - 1);
        out.row(0) += corner * a.row(n - 1);
      } else {
        for (Index i = 0; i + 1 < n; ++i) out.row(i) = a.row(i + 1);
        out.row(n - 1) += corner * a.row(0);
      }
      break;
    }
    case Kind::tridiagonal:
      for (Index i = 0; i < n; ++i) {
        if (i > 0) out.row(i) += a.row(i - 1);
        if (i + 1 < n) out.row(i) += a.row(i + 1);
      }
      out.row(0) += op.param * a.row(0);
      out.row(n - 1) += op.param * a.row(n - 1);
      break;
  }
  return out;
}

}  // namespace

CMatrix DisplacementOperator::left(const CMatrix& a) const {
  return apply_left(*this, a, false);
}

CMatrix DisplacementOperator::right(const CMatrix& a) const {
  return apply_left(*this, a.transpose(), true).transpose();
}

double displacement_residual(const DisplacementOperator& e,
                             const DisplacementOperator& f, const CMatrix& a,
                             const CMatrix& g, const CMatrix& h) {
  const CMatrix r = e.left(a) - f.right(a) - g * h.adjoint();
  return norm_inf(r);
}

namespace {

// e^{-2 pi i m / n} with m reduced mod n first.
cplx unit_phase(long long m, Index n) {
  m %= n;
  if (m < 0) m += n;
  return std::polar(1.0, -2 * std::numbers::pi * double(m) / double(n));
}

}  // namespace

CMatrix dft_matrix(Index n) {
  CMatrix f(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) f(j, k) = unit_phase((long long)j * k, n);
  return f;
}

CMatrix fourier_matrix(Index n, cplx phi) {
  double theta = std::arg(phi);
  if (theta == -std::numbers::pi) theta = std::numbers::pi;
  const double scale = 1.0 / std::sqrt(double(n));
  CMatrix f = dft_matrix(n) * scale;
  for (Index k = 0; k < n; ++k)
    f.row(k) *= std::polar(1.0, -theta * double(k) / double(n));
  return f;
}

RMatrix sine_matrix(Index n) {
  RMatrix s(n, n);
  const double c = std::sqrt(2.0 / double(n + 1));
  for (Index k = 1; k <= n; ++k)
    for (Index l = 1; l <= n; ++l)
      s(k - 1, l - 1) =
          c * std::sin(std::numbers::pi * double(k * l) / double(n + 1));
  return s;
}

RMatrix cosine_matrix(Index n) {
  RMatrix m(n, n);
  const double c = std::sqrt(2.0 / double(n));
  for (Index k = 1; k <= n; ++k)
    for (Index l = 1; l <= n; ++l) {
      const double q = l == 1 ? 1.0 / std::sqrt(2.0) : 1.0;
      m(k - 1, l - 1) = c * q *
                        std::cos(std::numbers::pi * double((2 * k - 1) * (l - 1)) /
                                 double(2 * n));
    }
  return m;
}

template <class Scalar>
Matrix<Scalar> toeplitz_matrix(const Toeplitz<Scalar>& t) {
  const Index n = t.size();
  Matrix<Scalar> a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = t.coeff(i - j);
  return a;
}

template <class Scalar>
Matrix<Scalar> toeplitz_hankel_matrix(const ToeplitzHankel<Scalar>& k) {
  const Index n = k.size();
  Matrix<Scalar> a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) a(i, j) = k.tc(i - j) + k.hc(i + j);
  return a;
}

CMatrix vandermonde_matrix(const CVector& w) {
  const Index n = w.size();
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i) {
    cplx p = 1.0;
    for (Index j = n - 1; j >= 0; --j) {
      a(i, j) = p;
      p *= w[i];
    }
  }
  return a;
}

template RMatrix dense_solve(const RMatrix&, const RMatrix&);
template CMatrix dense_solve(const CMatrix&, const CMatrix&);
template double dense_cond1(const RMatrix&);
template double dense_cond1(const CMatrix&);
template RMatrix dense_schur_complement(const RMatrix&, Index);
template CMatrix dense_schur_complement(const CMatrix&, Index);
template RMatrix toeplitz_matrix(const Toeplitz<double>&);
template CMatrix toeplitz_matrix(const Toeplitz<cplx>&);
template RMatrix toeplitz_hankel_matrix(const ToeplitzHankel<double>&);
template CMatrix toeplitz_hankel_matrix(const ToeplitzHankel<cplx>&);

}  // namespace dispsolve::oracle
