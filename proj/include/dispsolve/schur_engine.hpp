#ifndef DISPSOLVE_SCHUR_ENGINE_HPP
#define DISPSOLVE_SCHUR_ENGINE_HPP

// Working state of one augmented-matrix elimination. Exposed for tests that
// need to stop between steps; regular callers use solve_cauchy_like().
//
// Storage layout at step k (0-based):
//   rows 0..k-1 of g  left generator of augmented rows n+0..n+k-1 (knots s)
//   rows k..n-1 of g  left generator of the live rows of C       (knots t)
//   hs = H^*          r x n, column j is the right generator of column j
//   b                 right-hand sides, same row convention as g
// For gathered right knots the strictly upper part of each nonreconstructable
// diagonal block of the (2,1)-block is kept in the freed columns of hs:
// entry (n+i, j), alpha <= i < j <= omega, lives at hs(j - alpha - 1, i).

#include "dispsolve/gsa.hpp"

namespace dispsolve::detail {

template <class Scalar>
class SchurEngine {
 public:
  using Real = double;

  /// `plan` may be null (plain path). When given, H and s are permuted by it.
  SchurEngine(const CauchyLike<Scalar>& c, const Matrix<Scalar>& b,
              const GatherPlan* plan);

  /// Runs all n steps with the given strategy.
  void run(const SolveOptions& options);

  /// One step with the given strategy (k must equal steps_done()).
  void step(Index k, const PivotStrategy& pivot);

  Index size() const noexcept { return n_; }
  Index rank() const noexcept { return r_; }
  Index steps_done() const noexcept { return k_; }

  /// Entry (i, j) of the live Schur complement of C, i, j >= steps_done().
  Scalar live_entry(Index i, Index j) const;

  /// QR refresh of the live left generator and column selection by the
  /// right-generator norms. Returns false when skipped.
  bool gu_refresh(Index k);

  const Matrix<Scalar>& left_generator() const noexcept { return g_; }
  const Matrix<Scalar>& right_generator_adjoint() const noexcept { return hs_; }
  const std::vector<Index>& row_permutation() const noexcept { return row_perm_; }
  const std::vector<Index>& col_permutation() const noexcept { return col_perm_; }

  SolveReport<Scalar> finish();

 private:
  void load_lower(Index k);
  void load_upper(Index k);
  void load_row(Index k);
  void swap_rows(Index k, Index i);
  void swap_cols(Index k, Index j);
  void eliminate(Index k);
  void record_growth(Index k);

  Scalar dot_row_col(Index i, Index j) const;
  [[noreturn]] void collision(Index i, Index j) const;
  [[noreturn]] void singular(Index k) const;

  Index n_ = 0, r_ = 0, d_ = 0, k_ = 0;
  Vector<Scalar> t_, s_;
  Matrix<Scalar> g_;   // n x r
  Matrix<Scalar> hs_;  // r x n
  Matrix<Scalar> b_;   // n x d
  Vector<Scalar> ell_, u_;
  Vector<Scalar> tmp_r_;  // length r
  Vector<Scalar> tmp_d_;  // length d

  const GatherPlan* plan_ = nullptr;
  std::vector<Index> row_perm_, col_perm_;

  // ||U||_1 accumulators: column sums of |U| and the running max of the
  // column sums of |U^{-1}|.
  RVector u_colsum_;
  Real uinv_norm_ = 0;

  bool track_growth_ = false;
  Real g0_ = 0, h0_ = 0;
  std::vector<Real> trace_g_, trace_h_;
  Index gu_refreshes_ = 0, gu_skipped_ = 0;
};

extern template class SchurEngine<double>;
extern template class SchurEngine<cplx>;

}  // namespace dispsolve::detail

#endif
