#ifndef DISPSOLVE_ORACLE_HPP
#define DISPSOLVE_ORACLE_HPP

// Dense O(n^3) reference computations for testing. Nothing in here calls the
// fast transforms or the Schur elimination.

#include "dispsolve/displacement.hpp"

namespace dispsolve::oracle {

/// LU with partial pivoting. Throws ErrorCode::singular on an exactly zero
/// pivot column.
template <class Scalar>
Matrix<Scalar> dense_solve(const Matrix<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b);

/// ||A||_1 ||A^{-1}||_1 through an explicit inverse; +inf if singular.
template <class Scalar>
double dense_cond1(const Matrix<Scalar>& a);

/// A22 - A21 A11^{-1} A12 with A11 the leading p x p block.
template <class Scalar>
Matrix<Scalar> dense_schur_complement(const Matrix<Scalar>& a, Index p);

/// Structured matrices appearing in displacement equations.
struct DisplacementOperator {
  enum class Kind { diagonal, shift, shift_adjoint, tridiagonal };
  Kind kind = Kind::diagonal;
  CVector d;          // diagonal
  cplx param = 1.0;   // phi for the shifts, delta for Y_delta

  static DisplacementOperator diagonal(CVector d) {
    return {Kind::diagonal, std::move(d), 1.0};
  }
  /// Z_phi: ones on the subdiagonal, phi in the top right corner.
  static DisplacementOperator shift(cplx phi) { return {Kind::shift, {}, phi}; }
  static DisplacementOperator shift_adjoint(cplx phi) {
    return {Kind::shift_adjoint, {}, phi};
  }
  /// Y_delta: ones on both off-diagonals, delta in both diagonal corners.
  static DisplacementOperator tridiagonal(double delta) {
    return {Kind::tridiagonal, {}, delta};
  }

  /// M A.
  CMatrix left(const CMatrix& a) const;
  /// A M.
  CMatrix right(const CMatrix& a) const;
};

/// ||E A - A F - G H^*||_inf.
double displacement_residual(const DisplacementOperator& e,
                             const DisplacementOperator& f, const CMatrix& a,
                             const CMatrix& g, const CMatrix& h);

/// (e^{-2 pi i jk/n}).
CMatrix dft_matrix(Index n);
/// diag(phi^{-k/n}) n^{-1/2} (w^{-kl}) with the minimal-phase root.
CMatrix fourier_matrix(Index n, cplx phi);
RMatrix sine_matrix(Index n);
RMatrix cosine_matrix(Index n);

template <class Scalar>
Matrix<Scalar> toeplitz_matrix(const Toeplitz<Scalar>& t);
template <class Scalar>
Matrix<Scalar> toeplitz_hankel_matrix(const ToeplitzHankel<Scalar>& k);
/// (w_i^{n-j}), 1-based.
CMatrix vandermonde_matrix(const CVector& w);

/// Infinity norm.
template <class Derived>
double norm_inf(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace dispsolve::oracle

#endif
