#ifndef DISPSOLVE_CONVERTERS_HPP
#define DISPSOLVE_CONVERTERS_HPP

// Generators of the classical structured classes and their reduction to
// Cauchy-like form. A system A x = b with E A - A F = G H^* and spectral
// factorizations E = U D_t U^{-1}, F = V D_s V^{-1} becomes
//
//   C x~ = b~,   C = U^{-1} A V,   G~ = U^{-1} G,   H~ = V^* H,
//   b~ = U^{-1} b,   x = V x~.
//
// Every U and V used here is unitary.
//
//   class                E, F              U        V
//   Toeplitz-like        Z_xi, Z_eta       F_xi     F_eta
//   Toeplitz+Hankel-like Y_0, Y_1          S        C
//   Vandermonde-like     D_w, Z_phi^*      I        F_phi

#include <optional>

#include "dispsolve/displacement.hpp"
#include "dispsolve/transforms.hpp"

namespace dispsolve {

template <class Scalar>
struct GeneratorPair {
  Matrix<Scalar> g;
  Matrix<Scalar> h;
};

/// One of the unitary factors above.
struct Basis {
  enum class Kind { identity, fourier, sine, cosine };
  Kind kind = Kind::identity;
  cplx phi = 1.0;  // fourier only

  static Basis identity() { return {}; }
  static Basis fourier(cplx phi) { return {Kind::fourier, phi}; }
  static Basis sine() { return {Kind::sine, 1.0}; }
  static Basis cosine() { return {Kind::cosine, 1.0}; }

  /// Basis X (Op::apply) or Basis^* X (Op::adjoint). The Fourier basis
  /// rejects real input.
  template <class Scalar>
  Matrix<Scalar> apply(const Matrix<Scalar>& x, Op op = Op::apply) const;
};

template <class Scalar>
struct Conversion {
  CauchyLike<Scalar> cauchy;
  Basis left;             // U
  Basis right;            // V
  Matrix<Scalar> rhs;     // U^{-1} b

  /// x = V x~.
  Matrix<Scalar> recover(const Matrix<Scalar>& xt) const {
    return right.apply(xt, Op::apply);
  }
};

/// G, H with Z_1 T - T Z_{-1} = G H^* (r = 2).
template <class Scalar>
GeneratorPair<Scalar> toeplitz_generators(const Toeplitz<Scalar>& t);

/// G, H with Y_0 K - K Y_1 = G H^* (r = 4). Requires n >= 2.
template <class Scalar>
GeneratorPair<Scalar> toeplitz_hankel_generators(const ToeplitzHankel<Scalar>& k);

/// G = (w_i^n - conj(phi)), H = e_1, so that D_w W - W Z_phi^* = G H^*.
/// Throws when some w_i^n equals conj(phi).
GeneratorPair<cplx> vandermonde_generators(const Vandermonde& w, cplx phi);

/// Phase on a 64-point grid maximizing min_i |w_i^n - conj(phi)|; ties go to
/// the smallest angle.
cplx default_vandermonde_phase(const CVector& w);

Conversion<cplx> toeplitz_like_to_cauchy(const ToeplitzLike& a, const CMatrix& b);

/// Uses the pair (xi, eta) = (1, -1).
Conversion<cplx> toeplitz_to_cauchy(const Toeplitz<cplx>& t, const CMatrix& b);

template <class Scalar>
Conversion<Scalar> toeplitz_hankel_like_to_cauchy(
    const ToeplitzHankelLike<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b);

template <class Scalar>
Conversion<Scalar> toeplitz_hankel_to_cauchy(const ToeplitzHankel<Scalar>& k,
                                             const std::type_identity_t<Matrix<Scalar>>& b);

Conversion<cplx> vandermonde_like_to_cauchy(const VandermondeLike& a,
                                            const CMatrix& b);

/// phi defaults to default_vandermonde_phase(w).
Conversion<cplx> vandermonde_to_cauchy(const Vandermonde& w, const CMatrix& b,
                                       std::optional<cplx> phi = std::nullopt);

/// The Hankel matrix (h_{i+j}) with its rows reversed. Solve H x = b as
/// T x = reverse_rows(b).
template <class Scalar>
Toeplitz<Scalar> hankel_as_toeplitz(const Vector<Scalar>& h);

template <class Scalar>
Matrix<Scalar> reverse_rows(const Matrix<Scalar>& b) {
  return b.colwise().reverse();
}

}  // namespace dispsolve

#endif
