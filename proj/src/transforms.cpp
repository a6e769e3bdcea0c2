#include "dispsolve/transforms.hpp"

#include <cmath>
#include <numbers>

namespace dispsolve {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest prime factor handled by the direct radix-p butterfly; anything
// larger goes through Bluestein.
constexpr Index kMaxDirectRadix = 31;

std::vector<Index> factorize(Index n) {
  std::vector<Index> f;
  while (n % 4 == 0) {
    f.push_back(4);
    n /= 4;
  }
  while (n % 2 == 0) {
    f.push_back(2);
    n /= 2;
  }
  for (Index p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

Index next_pow2(Index n) {
  Index m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  Index n = 0;
  std::vector<Index> factors;
  std::vector<cplx> twiddle;  // e^{-2 pi i e/n}, e = 0..n-1

  // Bluestein state (used when a prime factor exceeds kMaxDirectRadix).
  std::unique_ptr<FftPlan> conv;
  std::vector<cplx> chirp;       // e^{-i pi j^2/n}
  std::vector<cplx> kernel_hat;  // forward transform of conj(chirp) kernel

  void recurse(const cplx* in, Index stride, cplx* out, Index len,
               std::size_t level, bool inverse, cplx* scratch) const;
  void mixed_radix(cplx* data, bool inverse) const;
  void bluestein(cplx* data, bool inverse) const;
};

void FftPlan::Impl::recurse(const cplx* in, Index stride, cplx* out,
                            Index len, std::size_t level, bool inverse,
                            cplx* scratch) const {
  if (len == 1) {
    out[0] = in[0];
    return;
  }
  const Index p = factors[level];
  const Index m = len / p;
  for (Index q = 0; q < p; ++q)
    recurse(in + q * stride, stride * p, out + q * m, m, level + 1, inverse,
            scratch);

  // Twiddle index step for this level: w_len^{e} = w_n^{e * (n/len)}.
  const Index step = n / len;
  auto tw = [&](Index e) {
    const cplx w = twiddle[static_cast<std::size_t>((e * step) % n)];
    return inverse ? std::conj(w) : w;
  };

  if (p == 2) {
    for (Index k = 0; k < m; ++k) {
      const cplx a = out[k];
      const cplx b = out[k + m] * tw(k);
      out[k] = a + b;
      out[k + m] = a - b;
    }
    return;
  }
  if (p == 4) {
    const cplx rot = inverse ? cplx(0, 1) : cplx(0, -1);
    for (Index k = 0; k < m; ++k) {
      const cplx a0 = out[k];
      const cplx a1 = out[k + m] * tw(k);
      const cplx a2 = out[k + 2 * m] * tw(2 * k);
      const cplx a3 = out[k + 3 * m] * tw(3 * k);
      const cplx s02 = a0 + a2, d02 = a0 - a2;
      const cplx s13 = a1 + a3, d13 = (a1 - a3) * rot;
      out[k] = s02 + s13;
      out[k + m] = d02 + d13;
      out[k + 2 * m] = s02 - s13;
      out[k + 3 * m] = d02 - d13;
    }
    return;
  }
  // Generic radix-p butterfly, O(p^2) per output group.
  for (Index k = 0; k < m; ++k) {
    for (Index q = 0; q < p; ++q) scratch[q] = out[k + q * m] * tw(q * k);
    for (Index j = 0; j < p; ++j) {
      cplx acc = scratch[0];
      for (Index q = 1; q < p; ++q) acc += scratch[q] * tw(((q * j) % p) * m);
      out[k + j * m] = acc;
    }
  }
}

void FftPlan::Impl::mixed_radix(cplx* data, bool inverse) const {
  std::vector<cplx> in(data, data + n);
  Index pmax = 1;
  for (Index p : factors) pmax = std::max(pmax, p);
  std::vector<cplx> scratch(static_cast<std::size_t>(pmax));
  recurse(in.data(), 1, data, n, 0, inverse, scratch.data());
}

void FftPlan::Impl::bluestein(cplx* data, bool inverse) const {
  const Index m = conv->size();
  std::vector<cplx> a(static_cast<std::size_t>(m), cplx(0));
  for (Index j = 0; j < n; ++j) {
    const cplx c = inverse ? std::conj(chirp[j]) : chirp[j];
    a[j] = data[j] * c;
  }
  conv->execute(a.data(), Direction::forward);
  for (Index j = 0; j < m; ++j)
    a[j] *= inverse ? std::conj(kernel_hat[(m - j) % m]) : kernel_hat[j];
  // For the inverse chirp the kernel is conj(b), whose transform is
  // conj(B) index-reversed.
  conv->execute(a.data(), Direction::inverse);
  for (Index k = 0; k < n; ++k) {
    const cplx c = inverse ? std::conj(chirp[k]) : chirp[k];
    data[k] = a[k] * c;
  }
}

FftPlan::FftPlan(Index n) : n_(n), impl_(std::make_unique<Impl>()) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "empty vector");
  impl_->n = n;
  impl_->factors = factorize(n);
  bool direct = true;
  for (Index p : impl_->factors)
    if (p > kMaxDirectRadix) direct = false;

  if (direct) {
    impl_->twiddle.resize(static_cast<std::size_t>(n));
    for (Index e = 0; e < n; ++e)
      impl_->twiddle[e] = std::polar(1.0, -2.0 * kPi * double(e) / double(n));
    return;
  }

  impl_->factors.clear();
  const Index m = next_pow2(2 * n - 1);
  impl_->conv = std::make_unique<FftPlan>(m);
  impl_->chirp.resize(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    // j^2 mod 2n keeps the phase argument small.
    const Index e = (j * j) % (2 * n);
    impl_->chirp[j] = std::polar(1.0, -kPi * double(e) / double(n));
  }
  std::vector<cplx> b(static_cast<std::size_t>(m), cplx(0));
  b[0] = std::conj(impl_->chirp[0]);
  for (Index j = 1; j < n; ++j) {
    b[j] = std::conj(impl_->chirp[j]);
    b[m - j] = b[j];
  }
  impl_->conv->execute(b.data(), Direction::forward);
  impl_->kernel_hat = std::move(b);
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

void FftPlan::execute(cplx* data, Direction dir) const {
  const bool inverse = dir == Direction::inverse;
  if (impl_->conv)
    impl_->bluestein(data, inverse);
  else
    impl_->mixed_radix(data, inverse);
  if (inverse) {
    const double scale = 1.0 / double(n_);
    for (Index k = 0; k < n_; ++k) data[k] *= scale;
  }
}

CVector dft(const CVector& x, Direction dir) {
  if (x.size() == 0) throw Error(ErrorCode::invalid_argument, "empty vector");
  CVector y = x;
  FftPlan(x.size()).execute(y.data(), dir);
  return y;
}

void require_unimodular(cplx phi, const char* what) {
  if (!(std::abs(std::abs(phi) - 1.0) <= 1e-14))
    throw Error(ErrorCode::invalid_argument,
                std::string(what) + ": phase not unimodular");
}

cplx principal_root(cplx phi, Index n) {
  double theta = std::arg(phi);
  if (theta <= -kPi) theta = kPi;
  return std::polar(1.0, theta / double(n));
}

CVector unit_roots(Index n, cplx phi) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "unit_roots: n < 1");
  require_unimodular(phi, "unit_roots");
  double theta = std::arg(phi);
  if (theta <= -kPi) theta = kPi;
  CVector r(n);
  for (Index k = 0; k < n; ++k)
    r[k] = std::polar(1.0, (theta + 2.0 * kPi * double(k)) / double(n));
  return r;
}

CMatrix fourier_multiply(const CMatrix& x, cplx phi, Op op) {
  require_unimodular(phi, "fourier_multiply");
  const Index n = x.rows();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "empty vector");
  const FftPlan plan(n);
  const cplx root = principal_root(phi, n);
  const double theta = std::arg(root);
  CVector diag(n);  // phi^{-k/n}
  for (Index k = 0; k < n; ++k) diag[k] = std::polar(1.0, -theta * double(k));

  CMatrix y = x;
  const double sq = std::sqrt(double(n));
  for (Index c = 0; c < y.cols(); ++c) {
    cplx* col = y.col(c).data();
    if (op == Op::apply) {
      plan.execute(col, Direction::forward);
      for (Index k = 0; k < n; ++k) col[k] *= diag[k] / sq;
    } else {
      for (Index k = 0; k < n; ++k) col[k] *= std::conj(diag[k]);
      plan.execute(col, Direction::inverse);
      for (Index k = 0; k < n; ++k) col[k] *= sq;
    }
  }
  return y;
}

namespace {

// (S x)_k, real kernel. N = n+1.
void dst1(const double* x, double* y, Index n, const FftPlan* plan) {
  const Index big = n + 1;
  const double scale = std::sqrt(2.0 / double(big));
  if (!plan) {
    for (Index k = 1; k <= n; ++k) {
      double acc = 0;
      for (Index l = 1; l <= n; ++l) {
        const Index e = (k * l) % (2 * big);
        acc += x[l - 1] * std::sin(kPi * double(e) / double(big));
      }
      y[k - 1] = scale * acc;
    }
    return;
  }
  std::vector<cplx> a(static_cast<std::size_t>(2 * big), cplx(0));
  for (Index l = 1; l <= n; ++l) {
    a[l] = x[l - 1];
    a[2 * big - l] = -x[l - 1];
  }
  plan->execute(a.data(), Direction::forward);
  for (Index k = 1; k <= n; ++k) y[k - 1] = -scale * 0.5 * a[k].imag();
}

double cos_weight(Index l, Index n) {
  return (l == 0 ? std::sqrt(0.5) : 1.0) * std::sqrt(2.0 / double(n));
}

// (C x)_k = sqrt(2/n) sum_l q_l x_l cos((2k+1) l pi/(2n)), 0-based.
void dct3(const double* x, double* y, Index n, const FftPlan* plan) {
  if (!plan) {
    for (Index k = 0; k < n; ++k) {
      double acc = 0;
      for (Index l = 0; l < n; ++l) {
        const Index e = ((2 * k + 1) * l) % (4 * n);
        acc += cos_weight(l, n) * x[l] * std::cos(kPi * double(e) / double(2 * n));
      }
      y[k] = acc;
    }
    return;
  }
  std::vector<cplx> a(static_cast<std::size_t>(2 * n), cplx(0));
  for (Index l = 0; l < n; ++l)
    a[l] = cos_weight(l, n) * x[l] * std::polar(1.0, kPi * double(l) / double(2 * n));
  plan->execute(a.data(), Direction::inverse);
  for (Index k = 0; k < n; ++k) y[k] = double(2 * n) * a[k].real();
}

// (C^T x)_l = sqrt(2/n) q_l sum_k x_k cos((2k+1) l pi/(2n)), 0-based.
void dct2(const double* x, double* y, Index n, const FftPlan* plan) {
  if (!plan) {
    for (Index l = 0; l < n; ++l) {
      double acc = 0;
      for (Index k = 0; k < n; ++k) {
        const Index e = ((2 * k + 1) * l) % (4 * n);
        acc += x[k] * std::cos(kPi * double(e) / double(2 * n));
      }
      y[l] = cos_weight(l, n) * acc;
    }
    return;
  }
  std::vector<cplx> a(static_cast<std::size_t>(2 * n));
  for (Index k = 0; k < n; ++k) {
    a[k] = x[k];
    a[2 * n - 1 - k] = x[k];
  }
  plan->execute(a.data(), Direction::forward);
  for (Index l = 0; l < n; ++l) {
    const cplx v = std::polar(1.0, -kPi * double(l) / double(2 * n)) * a[l];
    y[l] = cos_weight(l, n) * 0.5 * v.real();
  }
}

template <class Kernel>
RMatrix apply_real(const RMatrix& x, Index fft_len, Kernel kernel) {
  const Index n = x.rows();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "empty vector");
  std::unique_ptr<FftPlan> plan;
  if (n >= kTrigDirectCutoff) plan = std::make_unique<FftPlan>(fft_len);
  RMatrix y(n, x.cols());
  for (Index c = 0; c < x.cols(); ++c)
    kernel(x.col(c).data(), y.col(c).data(), n, plan.get());
  return y;
}

template <class RealFn>
CMatrix split_complex(const CMatrix& x, RealFn f) {
  const RMatrix re = f(RMatrix(x.real()));
  const RMatrix im = f(RMatrix(x.imag()));
  CMatrix y(x.rows(), x.cols());
  y.real() = re;
  y.imag() = im;
  return y;
}

}  // namespace

RMatrix sine_multiply(const RMatrix& x) {
  return apply_real(x, 2 * (x.rows() + 1), dst1);
}

CMatrix sine_multiply(const CMatrix& x) {
  return split_complex(x, [](const RMatrix& r) { return sine_multiply(r); });
}

RMatrix cosine_multiply(const RMatrix& x, Op op) {
  return op == Op::apply ? apply_real(x, 2 * x.rows(), dct3)
                         : apply_real(x, 2 * x.rows(), dct2);
}

CMatrix cosine_multiply(const CMatrix& x, Op op) {
  return split_complex(x, [op](const RMatrix& r) { return cosine_multiply(r, op); });
}

}  // namespace dispsolve
