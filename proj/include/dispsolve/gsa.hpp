#ifndef DISPSOLVE_GSA_HPP
#define DISPSOLVE_GSA_HPP

// Generalized Schur algorithm on the augmented matrix [C B; -I 0]. After n
// elimination steps the trailing Schur complement equals C^{-1} B, so the
// L and U factors are never stored: the working set is the two generators,
// the right-hand sides and two scratch vectors, (2r + d + 2) n scalars.

#include <optional>
#include <vector>

#include "dispsolve/displacement.hpp"

namespace dispsolve {

enum class Pivoting : int {
  none = 0,
  partial = 1,
  sweet_brent = 2,
  gu = 3,           // Gu's refresh at every step
  gu_periodic = 4,  // Gu's refresh every gu_period steps
  complete = 5,
};

struct PivotStrategy {
  Pivoting code = Pivoting::partial;
  int gu_period = 10;

  /// Maps the integer codes 0..5; throws on anything else or gu_period < 1.
  static PivotStrategy from_code(int code, int gu_period = 10);
  /// Refresh period actually used by the Gu variants (1 for Pivoting::gu).
  int refresh_period() const noexcept {
    return code == Pivoting::gu ? 1 : gu_period;
  }
  bool permutes_columns() const noexcept {
    return code != Pivoting::none && code != Pivoting::partial;
  }
};

/// Permutation gathering equal right knots into contiguous blocks, ordered
/// by first appearance. `perm[k]` is the original index placed at position
/// k; `alpha[k]`/`omega[k]` are the first/last positions of k's block.
struct GatherPlan {
  std::vector<Index> perm;
  std::vector<Index> alpha;
  std::vector<Index> omega;
  std::vector<Index> multiplicity;  // one entry per distinct value
  Index distinct = 0;

  bool trivial() const noexcept {
    return distinct == static_cast<Index>(perm.size());
  }
  Index max_multiplicity() const noexcept;
};

template <class Scalar>
GatherPlan build_gather_plan(const Vector<Scalar>& s);

/// Replaces every entry lying within `tol` of an earlier entry by the
/// (already collapsed) value of the first such entry. tol == 0 is a no-op.
template <class Scalar>
Vector<Scalar> collapse_knots(const Vector<Scalar>& s, double tol);

enum class Gathering {
  automatic,  // gather only when s has repeated entries
  never,      // reject repeated entries in s
  always,     // run the gathered code path even for distinct knots
};

struct SolveOptions {
  PivotStrategy pivot{};
  Gathering gathering = Gathering::automatic;
  bool track_growth = false;
};

template <class Scalar>
struct SolveReport {
  Matrix<Scalar> x;
  /// 1 / (||U||_1 ||U^{-1}||_1) for the U factor of the pivoted C.
  double rcond_u = 1.0;
  bool ill_conditioned = false;
  /// row_perm[k]: original row used as the k-th pivot row.
  std::vector<Index> row_perm;
  /// col_perm[k]: original column at elimination position k (includes the
  /// gathering permutation). x(col_perm[k], :) is the k-th computed row.
  std::vector<Index> col_perm;
  Index gu_refreshes = 0;
  Index gu_skipped = 0;
  /// max over steps of max |entry| of the live generators, relative to the
  /// initial generators. Only filled when SolveOptions::track_growth is set.
  double growth_g = 1.0;
  double growth_h = 1.0;
  std::vector<double> trace_g;
  std::vector<double> trace_h;
  /// Displacement parameter picked by a converter, when one was involved.
  std::optional<cplx> phi;
};

/// Solves C X = B. Repeated right knots are handled by gathering (only with
/// Pivoting::none or Pivoting::partial).
template <class Scalar>
SolveReport<Scalar> solve_cauchy_like(const CauchyLike<Scalar>& c,
                                      const std::type_identity_t<Matrix<Scalar>>& b,
                                      const SolveOptions& options = {});

/// Generators of the order-p Schur complement of a (possibly rectangular)
/// reconstructable Cauchy-like matrix, without pivoting.
template <class Scalar>
CauchyLike<Scalar> schur_complement(const CauchyLike<Scalar>& a, Index p);

/// Representation of C^*: knots (conj s, conj t), generators (-H, G).
template <class Scalar>
CauchyLike<Scalar> adjoint(const CauchyLike<Scalar>& c);

/// Representation of C^{-1}: knots (s, t), generators solving
/// C G' = -G and C^* H' = H.
template <class Scalar>
CauchyLike<Scalar> inverse(const CauchyLike<Scalar>& c,
                           const PivotStrategy& pivot = {});

inline constexpr double kMachineEps = 0x1p-52;

}  // namespace dispsolve

#endif
