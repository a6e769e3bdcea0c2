#ifndef DISPSOLVE_SRC_KNOTS_HPP
#define DISPSOLVE_SRC_KNOTS_HPP

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dispsolve/types.hpp"

namespace dispsolve::detail {

struct KnotKey {
  std::uint64_t re = 0, im = 0;
  bool operator==(const KnotKey&) const = default;
};

struct KnotKeyHash {
  std::size_t operator()(const KnotKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.re * 0x9E3779B97F4A7C15ull ^ k.im);
  }
};

inline std::uint64_t bits(double v) {
  return std::bit_cast<std::uint64_t>(v + 0.0);  // folds -0 into +0
}

inline KnotKey key(double v) { return {bits(v), 0}; }
inline KnotKey key(cplx v) { return {bits(v.real()), bits(v.imag())}; }

// Group label of every entry; labels are assigned in order of first
// appearance. Equality is exact.
template <class Scalar>
std::vector<Index> group_labels(const Vector<Scalar>& v, Index* groups) {
  std::unordered_map<KnotKey, Index, KnotKeyHash> seen;
  seen.reserve(static_cast<std::size_t>(v.size()));
  std::vector<Index> label(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(key(v[i]), Index(seen.size()));
    label[i] = it->second;
  }
  if (groups) *groups = Index(seen.size());
  return label;
}

}  // namespace dispsolve::detail

#endif
