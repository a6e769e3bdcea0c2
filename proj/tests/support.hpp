#ifndef DISPSOLVE_TESTS_SUPPORT_HPP
#define DISPSOLVE_TESTS_SUPPORT_HPP

#include "dispsolve/converters.hpp"
#include "dispsolve/gsa.hpp"
#include "dispsolve/oracle.hpp"
#include "dispsolve/solvers.hpp"
#include "dispsolve/transforms.hpp"
#include "instances.hpp"

namespace testing {

using namespace dispsolve;
namespace inst = dispsolve::instances;

inline CMatrix to_eigen(const inst::Dense& d) {
  CMatrix m(d.rows, d.cols);
  for (Index j = 0; j < d.cols; ++j)
    for (Index i = 0; i < d.rows; ++i) m(i, j) = d(i, j);
  return m;
}

inline CVector to_eigen(const std::vector<cplx>& v) {
  return Eigen::Map<const CVector>(v.data(), Index(v.size()));
}

inline CauchyLike<cplx> to_cauchy(const inst::CauchyData& c) {
  return {to_eigen(c.t), to_eigen(c.s), to_eigen(c.g), to_eigen(c.h)};
}

inline CauchyLike<double> to_real_cauchy(const inst::CauchyData& c) {
  return {to_eigen(c.t).real(), to_eigen(c.s).real(), to_eigen(c.g).real(),
          to_eigen(c.h).real()};
}

inline Toeplitz<cplx> to_toeplitz(const inst::ToeplitzData& t) {
  return {to_eigen(t.col), to_eigen(t.row)};
}

inline CMatrix random_matrix(inst::SplitMix64& rng, Index rows, Index cols,
                             bool complex = true) {
  return to_eigen(inst::random_block(rng, rows, cols, complex));
}

inline RMatrix random_real(inst::SplitMix64& rng, Index rows, Index cols) {
  return random_matrix(rng, rows, cols, false).real();
}

/// Interleaved knots so that the Cauchy part stays reasonably conditioned.
/// variant 0: roots of 1 and -1; 1: jittered points near the unit circle;
/// 2: real knots on a jittered integer grid.
inline CauchyLike<cplx> random_interleaved(inst::SplitMix64& rng, Index n, Index r,
                                           int variant) {
  CVector t(n), s(n);
  const double two_pi = 6.283185307179586;
  for (Index k = 0; k < n; ++k) {
    switch (variant) {
      case 0:
        t[k] = std::polar(1.0, two_pi * k / n);
        s[k] = std::polar(1.0, two_pi * (k + 0.5) / n);
        break;
      case 1:
        t[k] = std::polar(0.9 + 0.2 * rng.uniform(), two_pi * (k + 0.3 * rng.uniform()) / n);
        s[k] = std::polar(0.9 + 0.2 * rng.uniform(),
                          two_pi * (k + 0.5 + 0.3 * rng.uniform()) / n);
        break;
      default:
        t[k] = k + 0.3 * rng.uniform();
        s[k] = k + 0.5 + 0.3 * rng.uniform();
        break;
    }
  }
  const bool complex = variant != 2;
  return {t, s, random_matrix(rng, n, r, complex), random_matrix(rng, n, r, complex)};
}

template <class A, class B>
double rel_err(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& ref) {
  const double den = oracle::norm_inf(ref);
  const double num = oracle::norm_inf(x - ref);
  return den == 0 ? num : num / den;
}

}  // namespace testing

#endif
