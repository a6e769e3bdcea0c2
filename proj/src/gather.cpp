#include <algorithm>

#include "dispsolve/gsa.hpp"
#include "knots.hpp"

namespace dispsolve {

Index GatherPlan::max_multiplicity() const noexcept {
  Index m = 0;
  for (Index v : multiplicity) m = std::max(m, v);
  return m;
}

template <class Scalar>
GatherPlan build_gather_plan(const Vector<Scalar>& s) {
  const Index n = s.size();
  Index groups = 0;
  const auto label = detail::group_labels(s, &groups);

  GatherPlan plan;
  plan.distinct = groups;
  plan.multiplicity.assign(static_cast<std::size_t>(groups), 0);
  for (Index i = 0; i < n; ++i) ++plan.multiplicity[label[i]];

  std::vector<Index> start(static_cast<std::size_t>(groups), 0);
  for (Index g = 1; g < groups; ++g)
    start[g] = start[g - 1] + plan.multiplicity[g - 1];

  plan.perm.resize(static_cast<std::size_t>(n));
  plan.alpha.resize(static_cast<std::size_t>(n));
  plan.omega.resize(static_cast<std::size_t>(n));
  std::vector<Index> fill = start;
  for (Index i = 0; i < n; ++i) plan.perm[fill[label[i]]++] = i;
  for (Index g = 0; g < groups; ++g) {
    const Index a = start[g];
    const Index w = a + plan.multiplicity[g] - 1;
    for (Index k = a; k <= w; ++k) {
      plan.alpha[k] = a;
      plan.omega[k] = w;
    }
  }
  return plan;
}

template <class Scalar>
Vector<Scalar> collapse_knots(const Vector<Scalar>& s, double tol) {
  if (tol < 0)
    throw Error(ErrorCode::invalid_argument, "collapse_tol must be >= 0");
  Vector<Scalar> out = s;
  if (tol == 0) return out;
  // First earlier entry within tol wins; it already carries its collapsed
  // value, so chains collapse transitively.
  for (Index i = 1; i < s.size(); ++i) {
    for (Index j = 0; j < i; ++j) {
      if (std::abs(s[i] - s[j]) <= tol) {
        out[i] = out[j];
        break;
      }
    }
  }
  return out;
}

template GatherPlan build_gather_plan(const RVector&);
template GatherPlan build_gather_plan(const CVector&);
template RVector collapse_knots(const RVector&, double);
template CVector collapse_knots(const CVector&, double);

}  // namespace dispsolve
