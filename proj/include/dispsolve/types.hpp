#ifndef DISPSOLVE_TYPES_HPP
#define DISPSOLVE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

namespace dispsolve {

using Index = Eigen::Index;
using cplx = std::complex<double>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<double>;
using CMatrix = Matrix<cplx>;
using RVector = Vector<double>;
using CVector = Vector<cplx>;

template <class T>
inline constexpr bool is_complex_v = false;
template <class T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

enum class ErrorCode {
  invalid_argument,
  nonreconstructable,
  singular,
  structurally_singular,
  incompatible_pivoting,
};

// All library failures are reported through this exception; the C API maps
// the code onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// z^p by binary exponentiation; stays exact for roots of unity far longer
// than std::pow's exp/log route.
template <class Scalar>
inline Scalar int_pow(Scalar z, long long p) {
  Scalar acc(1);
  while (p > 0) {
    if (p & 1) acc *= z;
    z *= z;
    p >>= 1;
  }
  return acc;
}

inline double abs_max(const Eigen::Ref<const RMatrix>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}
inline double abs_max(const Eigen::Ref<const CMatrix>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace dispsolve

#endif
