#include "instances.hpp"

#include <cmath>
#include <numbers>

namespace dispsolve::instances {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return double(next() >> 11) * 0x1p-53; }

double SplitMix64::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(kTwoPi * u2);
}

cplx SplitMix64::cnormal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) / std::sqrt(2.0);
}

std::vector<cplx> roots_of(std::ptrdiff_t n, cplx phi) {
  double theta = std::arg(phi);
  if (theta == -std::numbers::pi) theta = std::numbers::pi;
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (std::ptrdiff_t k = 0; k < n; ++k)
    v[k] = std::polar(1.0, (theta + kTwoPi * double(k)) / double(n));
  return v;
}

Dense random_block(SplitMix64& rng, std::ptrdiff_t n, std::ptrdiff_t d,
                   bool complex) {
  Dense b(n, d);
  for (auto& v : b.data) v = complex ? rng.cnormal() : cplx(rng.normal());
  return b;
}

CauchyData random_cauchy(SplitMix64& rng, std::ptrdiff_t n, std::ptrdiff_t r,
                         bool complex) {
  CauchyData c;
  c.t = roots_of(n, 1.0);
  c.s = roots_of(n, -1.0);
  c.g = random_block(rng, n, r, complex);
  c.h = random_block(rng, n, r, complex);
  return c;
}

CauchyData random_real_cauchy(SplitMix64& rng, std::ptrdiff_t n,
                              std::ptrdiff_t r) {
  CauchyData c;
  c.t.resize(static_cast<std::size_t>(n));
  c.s.resize(static_cast<std::size_t>(n));
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    c.t[i] = double(i);
    c.s[i] = double(i) + 0.5;
  }
  c.g = random_block(rng, n, r, false);
  c.h = random_block(rng, n, r, false);
  return c;
}

ToeplitzData random_toeplitz(SplitMix64& rng, std::ptrdiff_t n, bool complex) {
  ToeplitzData t;
  t.col.resize(static_cast<std::size_t>(n));
  t.row.resize(static_cast<std::size_t>(n));
  for (auto& v : t.col) v = complex ? rng.cnormal() : cplx(rng.normal());
  for (auto& v : t.row) v = complex ? rng.cnormal() : cplx(rng.normal());
  if (n > 0) t.row[0] = t.col[0];
  return t;
}

ToeplitzHankelData random_toeplitz_hankel(SplitMix64& rng, std::ptrdiff_t n,
                                          bool complex) {
  ToeplitzHankelData k;
  k.t.resize(static_cast<std::size_t>(2 * n - 1));
  k.h.resize(static_cast<std::size_t>(2 * n - 1));
  for (auto& v : k.t) v = complex ? rng.cnormal() : cplx(rng.normal());
  for (auto& v : k.h) v = complex ? rng.cnormal() : cplx(rng.normal());
  return k;
}

std::vector<cplx> unit_circle_nodes(SplitMix64& rng, std::ptrdiff_t n,
                                    double jitter) {
  std::vector<cplx> w(static_cast<std::size_t>(n));
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double delta = jitter * (2 * rng.uniform() - 1);
    w[k] = std::polar(1.0, kTwoPi * (double(k) + delta) / double(n));
  }
  return w;
}

CauchyData hilbert(std::ptrdiff_t n) {
  CauchyData c;
  c.t.resize(static_cast<std::size_t>(n));
  c.s.resize(static_cast<std::size_t>(n));
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    c.t[i] = double(i + 1);
    c.s[i] = -double(i);
  }
  c.g = Dense(n, 1);
  c.h = Dense(n, 1);
  for (auto& v : c.g.data) v = 1.0;
  for (auto& v : c.h.data) v = 1.0;
  return c;
}

ToeplitzData gaussian_toeplitz(std::ptrdiff_t n, double sigma) {
  ToeplitzData t;
  t.col.resize(static_cast<std::size_t>(n));
  const double scale = std::sqrt(sigma / kTwoPi);
  for (std::ptrdiff_t k = 0; k < n; ++k)
    t.col[k] = scale * std::exp(-0.5 * sigma * double(k) * double(k));
  t.row = t.col;
  return t;
}

CauchyData sweet_brent(std::ptrdiff_t n, double tau, bool alternative) {
  CauchyData c;
  c.t = roots_of(n, 1.0);
  c.s = roots_of(n, -1.0);
  const double e = 1.0 / std::sqrt(double(n));
  auto f = [&](std::ptrdiff_t k) { return (k % 2 == 0) ? -e : e; };
  if (alternative) {
    c.g = Dense(n, 1);
    c.h = Dense(n, 1);
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      c.g(k, 0) = -tau * f(k);
      c.h(k, 0) = e;
    }
  } else {
    c.g = Dense(n, 2);
    c.h = Dense(n, 2);
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      c.g(k, 0) = e;
      c.g(k, 1) = e + tau * f(k);
      c.h(k, 0) = e;
      c.h(k, 1) = -e;
    }
  }
  return c;
}

ToeplitzLikeData toeplitz_generators(const ToeplitzData& t) {
  const std::ptrdiff_t n = std::ptrdiff_t(t.col.size());
  auto coeff = [&](std::ptrdiff_t k) { return k >= 0 ? t.col[k] : t.row[-k]; };
  ToeplitzLikeData p;
  p.g = Dense(n, 2);
  p.h = Dense(n, 2);
  if (n == 0) return p;
  p.g(0, 0) = coeff(0);
  p.g(0, 1) = 1.0;
  for (std::ptrdiff_t i = 1; i < n; ++i) p.g(i, 0) = coeff(i - n) + coeff(i);
  for (std::ptrdiff_t j = 0; j + 1 < n; ++j)
    p.h(j, 1) = std::conj(coeff(n - 1 - j) - coeff(-j - 1));
  p.h(n - 1, 0) = 1.0;
  p.h(n - 1, 1) = std::conj(coeff(0));
  return p;
}

ToeplitzLikeData deficient_toeplitz_like(SplitMix64& rng, std::ptrdiff_t n,
                                         std::ptrdiff_t deficiency,
                                         double perturbation) {
  const std::ptrdiff_t terms = n - deficiency;
  std::vector<cplx> a(static_cast<std::size_t>(terms)), z(a.size());
  for (std::ptrdiff_t m = 0; m < terms; ++m) {
    a[m] = rng.cnormal();
    z[m] = std::polar(1.0, kTwoPi * rng.uniform());
  }
  ToeplitzData t;
  t.col.assign(static_cast<std::size_t>(n), 0.0);
  t.row.assign(static_cast<std::size_t>(n), 0.0);
  for (std::ptrdiff_t m = 0; m < terms; ++m) {
    const cplx zi = std::conj(z[m]);
    cplx p = a[m], q = a[m];
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      t.col[k] += p;
      if (k > 0) t.row[k] += q;
      p *= z[m];
      q *= zi;
    }
  }
  t.row[0] = t.col[0];
  ToeplitzLikeData p = toeplitz_generators(t);
  for (auto& v : p.g.data) v += perturbation * rng.cnormal();
  for (auto& v : p.h.data) v += perturbation * rng.cnormal();
  return p;
}

CauchyData clustered_knots(SplitMix64& rng, std::ptrdiff_t clusters,
                           std::ptrdiff_t copies, std::ptrdiff_t r, double tau) {
  const std::ptrdiff_t n = clusters * copies;
  CauchyData c;
  c.t = roots_of(n, -1.0);
  c.s.resize(static_cast<std::size_t>(n));
  const std::vector<cplx> base = roots_of(clusters, 1.0);
  for (std::ptrdiff_t copy = 0; copy < copies; ++copy) {
    for (std::ptrdiff_t j = 0; j < clusters; ++j) {
      cplx v = base[j];
      if (copy > 0) {
        const cplx dir = std::polar(1.0, kTwoPi * rng.uniform());
        v *= 1.0 + tau * rng.uniform() * dir;
      }
      c.s[copy * clusters + j] = v;
    }
  }
  c.g = random_block(rng, n, r, true);
  c.h = random_block(rng, n, r, true);
  return c;
}

}  // namespace dispsolve::instances
