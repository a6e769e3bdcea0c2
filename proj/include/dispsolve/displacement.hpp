#ifndef DISPSOLVE_DISPLACEMENT_HPP
#define DISPSOLVE_DISPLACEMENT_HPP

#include <string>
#include <vector>

#include "dispsolve/types.hpp"

namespace dispsolve {

/// Cauchy-like matrix C defined through D_t C - C D_s = G H^*, i.e.
///
///   C_ij = (G_{i,:} . conj(H_{j,:})) / (t_i - s_j).
///
/// Row i of G holds phi_i^* and row j of H holds psi_j^*. The matrix may be
/// rectangular (t and s of different lengths); the solvers require it to be
/// square. Instances are immutable.
template <class Scalar>
class CauchyLike {
 public:
  CauchyLike() = default;
  CauchyLike(Vector<Scalar> t, Vector<Scalar> s, Matrix<Scalar> g,
             Matrix<Scalar> h);

  Index rows() const noexcept { return t_.size(); }
  Index cols() const noexcept { return s_.size(); }
  Index rank() const noexcept { return g_.cols(); }
  bool square() const noexcept { return rows() == cols(); }

  const Vector<Scalar>& t() const noexcept { return t_; }
  const Vector<Scalar>& s() const noexcept { return s_; }
  const Matrix<Scalar>& g() const noexcept { return g_; }
  const Matrix<Scalar>& h() const noexcept { return h_; }

  /// Reconstructs C_ij. Throws ErrorCode::nonreconstructable if t_i == s_j.
  Scalar entry(Index i, Index j) const;

 private:
  Vector<Scalar> t_, s_;
  Matrix<Scalar> g_, h_;
};

/// Toeplitz matrix T_ij = t_{i-j} given by its first column and first row.
template <class Scalar>
class Toeplitz {
 public:
  Toeplitz(Vector<Scalar> col, Vector<Scalar> row);
  Index size() const noexcept { return col_.size(); }
  const Vector<Scalar>& col() const noexcept { return col_; }
  const Vector<Scalar>& row() const noexcept { return row_; }
  /// t_k for 1-n <= k <= n-1.
  Scalar coeff(Index k) const { return k >= 0 ? col_[k] : row_[-k]; }

 private:
  Vector<Scalar> col_, row_;
};

/// Matrix with Z_xi A - A Z_eta = G H^*.
struct ToeplitzLike {
  ToeplitzLike(CMatrix g, CMatrix h, cplx xi = 1.0, cplx eta = -1.0);
  CMatrix g, h;
  cplx xi, eta;
  Index size() const noexcept { return g.rows(); }
};

/// K_ij = t_{i-j} + h_{i+j}, 0 <= i, j < n. `t` stores t_{1-n}..t_{n-1}
/// (so t_k lives at t[k + n - 1]) and `h` stores h_0..h_{2n-2}.
template <class Scalar>
class ToeplitzHankel {
 public:
  ToeplitzHankel(Vector<Scalar> t, Vector<Scalar> h);
  Index size() const noexcept { return (t_.size() + 1) / 2; }
  const Vector<Scalar>& t() const noexcept { return t_; }
  const Vector<Scalar>& h() const noexcept { return h_; }
  Scalar tc(Index k) const { return t_[k + size() - 1]; }
  Scalar hc(Index k) const { return h_[k]; }

 private:
  Vector<Scalar> t_, h_;
};

/// Matrix with Y_0 A - A Y_1 = G H^*.
template <class Scalar>
struct ToeplitzHankelLike {
  ToeplitzHankelLike(Matrix<Scalar> g, Matrix<Scalar> h);
  Matrix<Scalar> g, h;
  Index size() const noexcept { return g.rows(); }
};

/// W_ij = w_i^{n-j}, 1 <= i, j <= n.
struct Vandermonde {
  explicit Vandermonde(CVector w);
  CVector w;
  Index size() const noexcept { return w.size(); }
};

/// Matrix with D_w A - A Z_phi^* = G H^*.
struct VandermondeLike {
  VandermondeLike(CVector w, cplx phi, CMatrix g, CMatrix h);
  CVector w;
  cplx phi;
  CMatrix g, h;
  Index size() const noexcept { return w.size(); }
};

/// Materialize C densely.
template <class Scalar>
Matrix<Scalar> to_dense(const CauchyLike<Scalar>& c);

/// C V in O(n^2 r) without forming C.
template <class Scalar>
Matrix<Scalar> multiply(const CauchyLike<Scalar>& c, const std::type_identity_t<Matrix<Scalar>>& v);

/// T V through a 2n circulant embedding.
template <class Scalar>
Matrix<Scalar> multiply(const Toeplitz<Scalar>& t, const std::type_identity_t<Matrix<Scalar>>& v);

// --- diagnostics -----------------------------------------------------------

struct Issue {
  enum class Kind {
    knot_collision,      // t_i == s_j
    near_collision,      // |t_i - s_j| tiny but nonzero
    multiplicity,        // knot repeated more than r times
    repeated_node,       // classical Vandermonde with w_i == w_j
    not_unimodular,      // displacement parameter off the unit circle
    parameter_clash,     // xi == eta, or w_i^n == conj(phi)
    shape,               // inconsistent sizes
  };
  Kind kind;
  Index i = -1;
  Index j = -1;
  std::string message;
};

struct Diagnostics {
  std::vector<Issue> issues;
  bool clean() const noexcept { return issues.empty(); }
  bool has(Issue::Kind k) const;
  std::string summary() const;
};

/// Reports violated invariants without throwing.
template <class Scalar>
Diagnostics validate(const CauchyLike<Scalar>& c);
Diagnostics validate(const ToeplitzLike& a);
Diagnostics validate(const Vandermonde& a);
Diagnostics validate(const VandermondeLike& a);

// Relative threshold (times max |knot|) under which distinct knots are
// reported as a near collision.
inline constexpr double kNearCollisionTol = 1e-13;

}  // namespace dispsolve

#endif
