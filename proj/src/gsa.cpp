#include "dispsolve/gsa.hpp"

#include <numeric>
#include <sstream>

#include "dispsolve/schur_engine.hpp"
#include "knots.hpp"

namespace dispsolve {

PivotStrategy PivotStrategy::from_code(int code, int gu_period) {
  if (code < 0 || code > 5) {
    std::ostringstream os;
    os << "piv: unknown pivoting code " << code << " (expected 0..5)";
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  if (gu_period < 1)
    throw Error(ErrorCode::invalid_argument, "gu_period must be >= 1");
  return {static_cast<Pivoting>(code), gu_period};
}

namespace {

template <class Scalar>
void require_multiplicity(const Vector<Scalar>& v, Index r, const char* name) {
  Index groups = 0;
  const auto label = detail::group_labels(v, &groups);
  std::vector<Index> count(static_cast<std::size_t>(groups), 0);
  for (Index i = 0; i < v.size(); ++i) {
    if (++count[label[i]] > r) {
      std::ostringstream os;
      os << "structurally singular: " << name << "[" << i
         << "] repeats a knot more than r = " << r << " times";
      throw Error(ErrorCode::structurally_singular, os.str());
    }
  }
}

std::vector<Index> identity_perm(Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Index(0));
  return p;
}

}  // namespace

template <class Scalar>
SolveReport<Scalar> solve_cauchy_like(const CauchyLike<Scalar>& c,
                                      const std::type_identity_t<Matrix<Scalar>>& b,
                                      const SolveOptions& options) {
  if (!c.square())
    throw Error(ErrorCode::invalid_argument, "solve: matrix is not square");
  const Index n = c.rows();
  if (b.rows() != n)
    throw Error(ErrorCode::invalid_argument,
                "rhs: row count does not match the matrix size");
  if (n == 0 || b.cols() == 0) {
    SolveReport<Scalar> rep;
    rep.x = Matrix<Scalar>::Zero(n, b.cols());
    rep.row_perm = identity_perm(n);
    rep.col_perm = identity_perm(n);
    return rep;
  }
  require_multiplicity(c.t(), c.rank(), "t");
  require_multiplicity(c.s(), c.rank(), "s");

  const GatherPlan plan = build_gather_plan(c.s());
  const bool repeated = !plan.trivial();
  const bool gather =
      repeated || options.gathering == Gathering::always;
  if (repeated && options.gathering == Gathering::never)
    throw Error(ErrorCode::nonreconstructable,
                "repeated right knots require the gathered path");
  if (gather && options.pivot.permutes_columns())
    throw Error(ErrorCode::incompatible_pivoting,
                "pivoting incompatible with repeated knots: only none or "
                "partial pivoting keep equal right knots gathered");

  detail::SchurEngine<Scalar> engine(c, b, gather ? &plan : nullptr);
  engine.run(options);
  return engine.finish();
}

template <class Scalar>
CauchyLike<Scalar> schur_complement(const CauchyLike<Scalar>& a, Index p) {
  const Index m = a.rows(), n = a.cols();
  if (p < 0 || (p > 0 && p >= std::min(m, n)))
    throw Error(ErrorCode::invalid_argument,
                "schur_complement: need 0 <= p < min(rows, cols)");
  if (p == 0) return a;
  Matrix<Scalar> g = a.g(), h = a.h();
  const Vector<Scalar>& t = a.t();
  const Vector<Scalar>& s = a.s();
  const Index r = a.rank();
  Vector<Scalar> ell(m), u(n);
  for (Index k = 0; k < p; ++k) {
    for (Index i = k; i < m; ++i) {
      const Scalar den = t[i] - s[k];
      if (den == Scalar(0))
        throw Error(ErrorCode::nonreconstructable,
                    "schur_complement: t_i == s_j");
      Scalar acc(0);
      for (Index c = 0; c < r; ++c) {
        if constexpr (is_complex_v<Scalar>)
          acc += g(i, c) * std::conj(h(k, c));
        else
          acc += g(i, c) * h(k, c);
      }
      ell[i] = acc / den;
    }
    for (Index j = k + 1; j < n; ++j) {
      const Scalar den = t[k] - s[j];
      if (den == Scalar(0))
        throw Error(ErrorCode::nonreconstructable,
                    "schur_complement: t_i == s_j");
      Scalar acc(0);
      for (Index c = 0; c < r; ++c) {
        if constexpr (is_complex_v<Scalar>)
          acc += g(k, c) * std::conj(h(j, c));
        else
          acc += g(k, c) * h(j, c);
      }
      u[j] = acc / den;
    }
    const Scalar d = ell[k];
    if (d == Scalar(0)) {
      std::ostringstream os;
      os << "singular leading minor at step " << k;
      throw Error(ErrorCode::singular, os.str());
    }
    for (Index i = k + 1; i < m; ++i) g.row(i) -= (ell[i] / d) * g.row(k);
    for (Index j = k + 1; j < n; ++j) {
      Scalar f = u[j] / d;
      if constexpr (is_complex_v<Scalar>) f = std::conj(f);
      h.row(j) -= f * h.row(k);
    }
  }
  return CauchyLike<Scalar>(t.tail(m - p), s.tail(n - p), g.bottomRows(m - p),
                            h.bottomRows(n - p));
}

template <class Scalar>
CauchyLike<Scalar> adjoint(const CauchyLike<Scalar>& c) {
  return CauchyLike<Scalar>(c.s().conjugate(), c.t().conjugate(), -c.h(),
                            c.g());
}

template <class Scalar>
CauchyLike<Scalar> inverse(const CauchyLike<Scalar>& c,
                           const PivotStrategy& pivot) {
  SolveOptions opt;
  opt.pivot = pivot;
  Matrix<Scalar> gi = solve_cauchy_like(c, Matrix<Scalar>(-c.g()), opt).x;
  Matrix<Scalar> hi = solve_cauchy_like(adjoint(c), c.h(), opt).x;
  return CauchyLike<Scalar>(c.s(), c.t(), std::move(gi), std::move(hi));
}

template SolveReport<double> solve_cauchy_like(const CauchyLike<double>&,
                                               const RMatrix&,
                                               const SolveOptions&);
template SolveReport<cplx> solve_cauchy_like(const CauchyLike<cplx>&,
                                             const CMatrix&,
                                             const SolveOptions&);
template CauchyLike<double> schur_complement(const CauchyLike<double>&, Index);
template CauchyLike<cplx> schur_complement(const CauchyLike<cplx>&, Index);
template CauchyLike<double> adjoint(const CauchyLike<double>&);
template CauchyLike<cplx> adjoint(const CauchyLike<cplx>&);
template CauchyLike<double> inverse(const CauchyLike<double>&,
                                    const PivotStrategy&);
template CauchyLike<cplx> inverse(const CauchyLike<cplx>&,
                                  const PivotStrategy&);

}  // namespace dispsolve
