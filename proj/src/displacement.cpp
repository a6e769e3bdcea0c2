#include "dispsolve/displacement.hpp"

#include <cmath>
#include <sstream>

#include "dispsolve/transforms.hpp"
#include "knots.hpp"

namespace dispsolve {

namespace {

template <class Scalar>
Scalar row_dot_conj(const Matrix<Scalar>& g, Index i, const Matrix<Scalar>& h,
                    Index j) {
  Scalar acc(0);
  for (Index c = 0; c < g.cols(); ++c) {
    if constexpr (is_complex_v<Scalar>)
      acc += g(i, c) * std::conj(h(j, c));
    else
      acc += g(i, c) * h(j, c);
  }
  return acc;
}

[[noreturn]] void nonreconstructable(Index i, Index j) {
  std::ostringstream os;
  os << "nonreconstructable entry (" << i << ", " << j << "): t_i == s_j";
  throw Error(ErrorCode::nonreconstructable, os.str());
}

}  // namespace

template <class Scalar>
CauchyLike<Scalar>::CauchyLike(Vector<Scalar> t, Vector<Scalar> s,
                               Matrix<Scalar> g, Matrix<Scalar> h)
    : t_(std::move(t)), s_(std::move(s)), g_(std::move(g)), h_(std::move(h)) {
  if (g_.rows() != t_.size())
    throw Error(ErrorCode::invalid_argument,
                "G: row count does not match the length of t");
  if (h_.rows() != s_.size())
    throw Error(ErrorCode::invalid_argument,
                "H: row count does not match the length of s");
  if (g_.cols() != h_.cols())
    throw Error(ErrorCode::invalid_argument,
                "G/H: generator column counts differ");
  if (g_.cols() < 1 && (t_.size() > 0 || s_.size() > 0))
    throw Error(ErrorCode::invalid_argument, "G/H: displacement rank must be >= 1");
}

template <class Scalar>
Scalar CauchyLike<Scalar>::entry(Index i, Index j) const {
  const Scalar den = t_[i] - s_[j];
  if (den == Scalar(0)) nonreconstructable(i, j);
  return row_dot_conj(g_, i, h_, j) / den;
}

template <class Scalar>
Toeplitz<Scalar>::Toeplitz(Vector<Scalar> col, Vector<Scalar> row)
    : col_(std::move(col)), row_(std::move(row)) {
  if (col_.size() != row_.size())
    throw Error(ErrorCode::invalid_argument,
                "toeplitz: first column and first row differ in length");
  if (col_.size() > 0 && col_[0] != row_[0])
    throw Error(ErrorCode::invalid_argument,
                "toeplitz: col[0] and row[0] must coincide");
}

ToeplitzLike::ToeplitzLike(CMatrix g_, CMatrix h_, cplx xi_, cplx eta_)
    : g(std::move(g_)), h(std::move(h_)), xi(xi_), eta(eta_) {
  if (g.rows() != h.rows() || g.cols() != h.cols())
    throw Error(ErrorCode::invalid_argument,
                "G/H: generator shapes differ");
}

template <class Scalar>
ToeplitzHankel<Scalar>::ToeplitzHankel(Vector<Scalar> t, Vector<Scalar> h)
    : t_(std::move(t)), h_(std::move(h)) {
  if (t_.size() != h_.size() || t_.size() % 2 == 0)
    throw Error(ErrorCode::invalid_argument,
                "toeplitz_hankel: t and h must both have length 2n-1");
}

template <class Scalar>
ToeplitzHankelLike<Scalar>::ToeplitzHankelLike(Matrix<Scalar> g_,
                                               Matrix<Scalar> h_)
    : g(std::move(g_)), h(std::move(h_)) {
  if (g.rows() != h.rows() || g.cols() != h.cols())
    throw Error(ErrorCode::invalid_argument, "G/H: generator shapes differ");
}

Vandermonde::Vandermonde(CVector w_) : w(std::move(w_)) {}

VandermondeLike::VandermondeLike(CVector w_, cplx phi_, CMatrix g_, CMatrix h_)
    : w(std::move(w_)), phi(phi_), g(std::move(g_)), h(std::move(h_)) {
  if (g.rows() != w.size() || h.rows() != w.size() || g.cols() != h.cols())
    throw Error(ErrorCode::invalid_argument, "G/H: generator shapes differ");
}

template <class Scalar>
Matrix<Scalar> to_dense(const CauchyLike<Scalar>& c) {
  Matrix<Scalar> a(c.rows(), c.cols());
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < c.rows(); ++i) a(i, j) = c.entry(i, j);
  return a;
}

template <class Scalar>
Matrix<Scalar> multiply(const CauchyLike<Scalar>& c, const std::type_identity_t<Matrix<Scalar>>& v) {
  if (v.rows() != c.cols())
    throw Error(ErrorCode::invalid_argument, "multiply: dimension mismatch");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(c.rows(), v.cols());
  Vector<Scalar> col(c.rows());
  for (Index j = 0; j < c.cols(); ++j) {
    for (Index i = 0; i < c.rows(); ++i) col[i] = c.entry(i, j);
    out.noalias() += col * v.row(j);
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> multiply(const Toeplitz<Scalar>& t, const std::type_identity_t<Matrix<Scalar>>& v) {
  const Index n = t.size();
  if (v.rows() != n)
    throw Error(ErrorCode::invalid_argument, "multiply: dimension mismatch");
  if (n == 0) return Matrix<Scalar>(0, v.cols());
  const Index m = 2 * n;
  const FftPlan plan(m);
  std::vector<cplx> c(static_cast<std::size_t>(m), cplx(0));
  for (Index k = 0; k < n; ++k) c[k] = t.col()[k];
  for (Index k = 1; k < n; ++k) c[m - k] = t.row()[k];
  plan.execute(c.data(), Direction::forward);

  Matrix<Scalar> out(n, v.cols());
  std::vector<cplx> x(static_cast<std::size_t>(m));
  for (Index j = 0; j < v.cols(); ++j) {
    std::fill(x.begin(), x.end(), cplx(0));
    for (Index k = 0; k < n; ++k) x[k] = v(k, j);
    plan.execute(x.data(), Direction::forward);
    for (Index k = 0; k < m; ++k) x[k] *= c[k];
    plan.execute(x.data(), Direction::inverse);
    for (Index k = 0; k < n; ++k) {
      if constexpr (is_complex_v<Scalar>)
        out(k, j) = x[k];
      else
        out(k, j) = x[k].real();
    }
  }
  return out;
}

bool Diagnostics::has(Issue::Kind k) const {
  for (const auto& i : issues)
    if (i.kind == k) return true;
  return false;
}

std::string Diagnostics::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.message << '\n';
  return os.str();
}

namespace {

template <class Scalar>
void check_multiplicity(const Vector<Scalar>& v, Index r, const char* name,
                        Diagnostics& out) {
  Index groups = 0;
  const auto label = detail::group_labels(v, &groups);
  std::vector<Index> count(static_cast<std::size_t>(groups), 0);
  std::vector<Index> first(static_cast<std::size_t>(groups), -1);
  for (Index i = 0; i < v.size(); ++i) {
    if (count[label[i]]++ == 0) first[label[i]] = i;
  }
  for (Index g = 0; g < groups; ++g) {
    if (count[g] > r) {
      std::ostringstream os;
      os << name << "[" << first[g] << "] repeated " << count[g]
         << " times, more than the displacement rank " << r;
      out.issues.push_back({Issue::Kind::multiplicity, first[g], count[g], os.str()});
    }
  }
}

}  // namespace

template <class Scalar>
Diagnostics validate(const CauchyLike<Scalar>& c) {
  Diagnostics d;
  double scale = 0;
  for (Index i = 0; i < c.rows(); ++i) scale = std::max(scale, std::abs(c.t()[i]));
  for (Index j = 0; j < c.cols(); ++j) scale = std::max(scale, std::abs(c.s()[j]));
  const double near = kNearCollisionTol * scale;

  for (Index i = 0; i < c.rows(); ++i) {
    for (Index j = 0; j < c.cols(); ++j) {
      const double gap = std::abs(c.t()[i] - c.s()[j]);
      if (c.t()[i] == c.s()[j]) {
        std::ostringstream os;
        os << "knot collision t[" << i << "] == s[" << j << "]";
        d.issues.push_back({Issue::Kind::knot_collision, i, j, os.str()});
      } else if (gap <= near) {
        std::ostringstream os;
        os << "near knot collision |t[" << i << "] - s[" << j << "]| = " << gap;
        d.issues.push_back({Issue::Kind::near_collision, i, j, os.str()});
      }
    }
  }
  check_multiplicity(c.s(), c.rank(), "s", d);
  check_multiplicity(c.t(), c.rank(), "t", d);
  return d;
}

Diagnostics validate(const ToeplitzLike& a) {
  Diagnostics d;
  for (auto [p, name] : {std::pair{a.xi, "xi"}, std::pair{a.eta, "eta"}}) {
    if (!(std::abs(std::abs(p) - 1.0) <= 1e-14))
      d.issues.push_back({Issue::Kind::not_unimodular, -1, -1,
                          std::string(name) + " is not unimodular"});
  }
  if (a.xi == a.eta)
    d.issues.push_back({Issue::Kind::parameter_clash, -1, -1,
                        "xi == eta: knot sets coincide"});
  return d;
}

Diagnostics validate(const Vandermonde& a) {
  Diagnostics d;
  Index groups = 0;
  const auto label = detail::group_labels(a.w, &groups);
  std::vector<Index> first(static_cast<std::size_t>(groups), -1);
  for (Index i = 0; i < a.size(); ++i) {
    if (first[label[i]] < 0) {
      first[label[i]] = i;
    } else {
      std::ostringstream os;
      os << "repeated node w[" << i << "] == w[" << first[label[i]]
         << "]: classical Vandermonde matrix is singular";
      d.issues.push_back({Issue::Kind::repeated_node, first[label[i]], i, os.str()});
    }
  }
  return d;
}

Diagnostics validate(const VandermondeLike& a) {
  Diagnostics d;
  if (!(std::abs(std::abs(a.phi) - 1.0) <= 1e-14))
    d.issues.push_back({Issue::Kind::not_unimodular, -1, -1, "phi is not unimodular"});
  const Index n = a.size();
  const cplx target = std::conj(a.phi);
  for (Index i = 0; i < n; ++i) {
    if (int_pow(a.w[i], n) == target) {
      std::ostringstream os;
      os << "node w[" << i << "] collides with phi (w^n == conj(phi))";
      d.issues.push_back({Issue::Kind::parameter_clash, i, -1, os.str()});
    }
  }
  return d;
}

template class CauchyLike<double>;
template class CauchyLike<cplx>;
template class Toeplitz<double>;
template class Toeplitz<cplx>;
template class ToeplitzHankel<double>;
template class ToeplitzHankel<cplx>;
template struct ToeplitzHankelLike<double>;
template struct ToeplitzHankelLike<cplx>;
template RMatrix to_dense(const CauchyLike<double>&);
template CMatrix to_dense(const CauchyLike<cplx>&);
template RMatrix multiply(const CauchyLike<double>&, const RMatrix&);
template CMatrix multiply(const CauchyLike<cplx>&, const CMatrix&);
template RMatrix multiply(const Toeplitz<double>&, const RMatrix&);
template CMatrix multiply(const Toeplitz<cplx>&, const CMatrix&);
template Diagnostics validate(const CauchyLike<double>&);
template Diagnostics validate(const CauchyLike<cplx>&);

}  // namespace dispsolve
