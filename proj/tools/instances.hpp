#ifndef DISPSOLVE_TOOLS_INSTANCES_HPP
#define DISPSOLVE_TOOLS_INSTANCES_HPP

// Reproducible test-problem families. Plain data only, column-major.
//
// Random stream (SplitMix64):
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   next = z ^ (z >> 31)
// uniform() = (next >> 11) * 2^-53 in [0, 1).
// normal() = sqrt(-2 ln(1 - u1)) cos(2 pi u2) with two fresh uniforms.
// cnormal() = (normal() + i normal()) / sqrt(2).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dispsolve::instances {

using cplx = std::complex<double>;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  double uniform();
  double normal();
  cplx cnormal();

 private:
  std::uint64_t state_;
};

struct Dense {
  std::ptrdiff_t rows = 0, cols = 0;
  std::vector<cplx> data;

  Dense() = default;
  Dense(std::ptrdiff_t r, std::ptrdiff_t c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}
  cplx& operator()(std::ptrdiff_t i, std::ptrdiff_t j) {
    return data[static_cast<std::size_t>(i + j * rows)];
  }
  cplx operator()(std::ptrdiff_t i, std::ptrdiff_t j) const {
    return data[static_cast<std::size_t>(i + j * rows)];
  }
};

struct CauchyData {
  std::vector<cplx> t, s;
  Dense g, h;
};

struct ToeplitzData {
  std::vector<cplx> col, row;
};

struct ToeplitzLikeData {
  Dense g, h;
  cplx xi = 1.0, eta = -1.0;
};

struct ToeplitzHankelData {
  std::vector<cplx> t, h;  // t_{1-n}..t_{n-1}, h_0..h_{2n-2}
};

/// Gaussian n x d block, complex or real.
Dense random_block(SplitMix64& rng, std::ptrdiff_t n, std::ptrdiff_t d,
                   bool complex);

/// Knots t = n-th roots of 1, s = n-th roots of -1, Gaussian generators.
CauchyData random_cauchy(SplitMix64& rng, std::ptrdiff_t n, std::ptrdiff_t r,
                         bool complex = true);

/// Real knots t_i = i, s_j = j + 1/2 and real Gaussian generators.
CauchyData random_real_cauchy(SplitMix64& rng, std::ptrdiff_t n,
                              std::ptrdiff_t r);

ToeplitzData random_toeplitz(SplitMix64& rng, std::ptrdiff_t n, bool complex);
ToeplitzHankelData random_toeplitz_hankel(SplitMix64& rng, std::ptrdiff_t n,
                                          bool complex);

/// e^{2 pi i (k + delta_k) / n}, delta_k uniform in [-jitter, jitter].
std::vector<cplx> unit_circle_nodes(SplitMix64& rng, std::ptrdiff_t n,
                                    double jitter = 0.25);

/// Hilbert matrix 1/(i + j + 1) (0-based) as t_i = i + 1, s_j = -j, G = H = 1.
CauchyData hilbert(std::ptrdiff_t n);

/// a_ij = sqrt(sigma / 2 pi) exp(-sigma (i - j)^2 / 2).
ToeplitzData gaussian_toeplitz(std::ptrdiff_t n, double sigma);

/// Knots t = n-th roots of 1, s = n-th roots of -1. The classic pair is
/// G = [e, e + tau f], H = [e, -e]; the alternative pair G = -tau f, H = e
/// represents the same matrix without cancellation.
/// e = n^{-1/2} (1, ..., 1), f_k = n^{-1/2} (-1)^{k+1}, k = 0..n-1.
CauchyData sweet_brent(std::ptrdiff_t n, double tau, bool alternative);

/// Toeplitz matrix of rank n - deficiency, t_k = sum_m a_m z_m^k with random
/// unimodular z_m, as Toeplitz-like generators for (Z_1, Z_{-1}) with every
/// generator entry perturbed by `perturbation` times a Gaussian.
ToeplitzLikeData deficient_toeplitz_like(SplitMix64& rng, std::ptrdiff_t n,
                                         std::ptrdiff_t deficiency,
                                         double perturbation);

/// Cauchy-like matrix with clustered right knots: `clusters` equispaced
/// points on the unit circle, each present once exactly and `copies - 1`
/// more times with relative perturbation below tau. t = n-th roots of -1,
/// n = clusters * copies, Gaussian generators of rank r.
CauchyData clustered_knots(SplitMix64& rng, std::ptrdiff_t clusters,
                           std::ptrdiff_t copies, std::ptrdiff_t r, double tau);

/// Generators of Z_1 T - T Z_{-1} = G H^* for a Toeplitz matrix, computed
/// independently of the library (used by generated problem files).
ToeplitzLikeData toeplitz_generators(const ToeplitzData& t);

/// The n values e^{i (theta + 2 pi k) / n} for phi = e^{i theta}, theta in
/// (-pi, pi].
std::vector<cplx> roots_of(std::ptrdiff_t n, cplx phi);

}  // namespace dispsolve::instances

#endif
