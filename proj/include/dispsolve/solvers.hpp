#ifndef DISPSOLVE_SOLVERS_HPP
#define DISPSOLVE_SOLVERS_HPP

// One-call solvers: reduce to Cauchy-like form, run the Schur elimination,
// map the solution back through the right basis.

#include <optional>

#include "dispsolve/converters.hpp"
#include "dispsolve/gsa.hpp"

namespace dispsolve {

SolveReport<cplx> solve_toeplitz(const Toeplitz<cplx>& t, const CMatrix& b,
                                 const SolveOptions& options = {});

SolveReport<cplx> solve_toeplitz_like(const ToeplitzLike& a, const CMatrix& b,
                                      const SolveOptions& options = {});

/// Real data stays real end to end.
template <class Scalar>
SolveReport<Scalar> solve_toeplitz_hankel(const ToeplitzHankel<Scalar>& k,
                                          const std::type_identity_t<Matrix<Scalar>>& b,
                                          const SolveOptions& options = {});

template <class Scalar>
SolveReport<Scalar> solve_toeplitz_hankel_like(
    const ToeplitzHankelLike<Scalar>& a, const std::type_identity_t<Matrix<Scalar>>& b,
    const SolveOptions& options = {});

/// W = (w_i^{n-j}). Repeated nodes throw ErrorCode::structurally_singular.
/// The phase used is returned in SolveReport::phi.
SolveReport<cplx> solve_vandermonde(const Vandermonde& w, const CMatrix& b,
                                    const SolveOptions& options = {},
                                    std::optional<cplx> phi = std::nullopt);

SolveReport<cplx> solve_vandermonde_like(const VandermondeLike& a,
                                         const CMatrix& b,
                                         const SolveOptions& options = {});

}  // namespace dispsolve

#endif
