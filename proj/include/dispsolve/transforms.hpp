#ifndef DISPSOLVE_TRANSFORMS_HPP
#define DISPSOLVE_TRANSFORMS_HPP

// Fast products with the unitary matrices that diagonalize the displacement
// operators used by the converters:
//
//   F_phi = diag(phi^{-k/n}) F_1,    F_1 = n^{-1/2} (w^{-kl}),  w = e^{2 pi i/n}
//   S     = sqrt(2/(n+1)) (sin(k l pi/(n+1)))                  (DST-I, involutory)
//   C     = sqrt(2/n) (q_l cos((2k-1)(l-1) pi/(2n)))            (orthogonal)
//
// F_phi diagonalizes Z_phi, S diagonalizes Y_0 and C diagonalizes Y_1.

#include <memory>
#include <vector>

#include "dispsolve/types.hpp"

namespace dispsolve {

enum class Direction { forward, inverse };
enum class Op { apply, adjoint };

// Arbitrary-length FFT. A plan is immutable once built and may be shared
// between threads.
class FftPlan {
 public:
  explicit FftPlan(Index n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;

  Index size() const noexcept { return n_; }

  // In-place transform of `data` (length size()). The inverse includes 1/n.
  void execute(cplx* data, Direction dir) const;

 private:
  struct Impl;
  Index n_ = 0;
  std::unique_ptr<Impl> impl_;
};

/// Discrete Fourier transform X_k = sum_j x_j e^{-2 pi i jk/n} (forward) or
/// its exact inverse. Throws on empty input.
CVector dft(const CVector& x, Direction dir);

/// Columnwise F_phi X (Op::apply) or F_phi^* X (Op::adjoint).
CMatrix fourier_multiply(const CMatrix& x, cplx phi, Op op = Op::apply);

/// Columnwise S X. Real input gives real output.
RMatrix sine_multiply(const RMatrix& x);
CMatrix sine_multiply(const CMatrix& x);

/// Columnwise C X (Op::apply) or C^T X (Op::adjoint).
RMatrix cosine_multiply(const RMatrix& x, Op op = Op::apply);
CMatrix cosine_multiply(const CMatrix& x, Op op = Op::apply);

/// The n values phi^{1/n} w^k, k = 0..n-1, with the minimal-phase root.
CVector unit_roots(Index n, cplx phi);

/// Minimal-phase n-th root of a unimodular scalar: e^{i arg(phi)/n} with
/// arg(phi) in (-pi, pi].
cplx principal_root(cplx phi, Index n);

/// Throws unless | |phi| - 1 | <= 1e-14.
void require_unimodular(cplx phi, const char* what);

// Below this length the sine and cosine products are evaluated directly.
inline constexpr Index kTrigDirectCutoff = 64;

}  // namespace dispsolve

#endif
