#include "dispsolve/solvers.hpp"

#include <numeric>

namespace dispsolve {

namespace {

template <class Scalar>
SolveReport<Scalar> empty_report(Index n, Index d) {
  SolveReport<Scalar> rep;
  rep.x = Matrix<Scalar>::Zero(n, d);
  rep.row_perm.resize(static_cast<std::size_t>(n));
  std::iota(rep.row_perm.begin(), rep.row_perm.end(), Index(0));
  rep.col_perm = rep.row_perm;
  return rep;
}

template <class Scalar>
SolveReport<Scalar> run(const Conversion<Scalar>& conv,
                        const SolveOptions& options) {
  auto rep = solve_cauchy_like(conv.cauchy, conv.rhs, options);
  rep.x = conv.recover(rep.x);
  return rep;
}

}  // namespace

SolveReport<cplx> solve_toeplitz(const Toeplitz<cplx>& t, const CMatrix& b,
                                 const SolveOptions& options) {
  if (t.size() == 0) return empty_report<cplx>(0, b.cols());
  return run(toeplitz_to_cauchy(t, b), options);
}

SolveReport<cplx> solve_toeplitz_like(const ToeplitzLike& a, const CMatrix& b,
                                      const SolveOptions& options) {
  if (a.size() == 0) return empty_report<cplx>(0, b.cols());
  return run(toeplitz_like_to_cauchy(a, b), options);
}

template <class Scalar>
SolveReport<Scalar> solve_toeplitz_hankel(const ToeplitzHankel<Scalar>& k,
                                          const std::type_identity_t<Matrix<Scalar>>& b,
                                          const SolveOptions& options) {
  return run(toeplitz_hankel_to_cauchy(k, b), options);
}

template <class Scalar>
SolveReport<Scalar> solve_toeplitz_hankel_like(
    const ToeplitzHankelLike<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b,
    const SolveOptions& options) {
  return run(toeplitz_hankel_like_to_cauchy(a, b), options);
}

SolveReport<cplx> solve_vandermonde(const Vandermonde& w, const CMatrix& b,
                                    const SolveOptions& options,
                                    std::optional<cplx> phi) {
  if (w.size() == 0) return empty_report<cplx>(0, b.cols());
  const Diagnostics diag = validate(w);
  if (diag.has(Issue::Kind::repeated_node))
    throw Error(ErrorCode::structurally_singular, diag.issues.front().message);
  const cplx p = phi ? *phi : default_vandermonde_phase(w.w);
  auto rep = run(vandermonde_to_cauchy(w, b, p), options);
  rep.phi = p;
  return rep;
}

SolveReport<cplx> solve_vandermonde_like(const VandermondeLike& a,
                                         const CMatrix& b,
                                         const SolveOptions& options) {
  if (a.size() == 0) return empty_report<cplx>(0, b.cols());
  auto rep = run(vandermonde_like_to_cauchy(a, b), options);
  rep.phi = a.phi;
  return rep;
}

template SolveReport<double> solve_toeplitz_hankel(const ToeplitzHankel<double>&,
                                                   const RMatrix&,
                                                   const SolveOptions&);
template SolveReport<cplx> solve_toeplitz_hankel(const ToeplitzHankel<cplx>&,
                                                 const CMatrix&,
                                                 const SolveOptions&);
template SolveReport<double> solve_toeplitz_hankel_like(
    const ToeplitzHankelLike<double>&, const RMatrix&, const SolveOptions&);
template SolveReport<cplx> solve_toeplitz_hankel_like(
    const ToeplitzHankelLike<cplx>&, const CMatrix&, const SolveOptions&);

}  // namespace dispsolve
