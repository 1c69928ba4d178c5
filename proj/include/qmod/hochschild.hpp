// Graded dimensions of the zeroth Hochschild homology of a path algebra,
// which is spanned by cyclic equivalence classes of cycles, and the power
// maps on classes that cut out its primitive part.
#pragma once

#include <cstdint>
#include <stdexcept>

#include "qmod/cycles.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// dim HH_0 in degree d: the number of cycle classes of dimension vector d.
inline std::int64_t hh0_graded_dim(const Quiver& q, const DimVector& d) {
  return static_cast<std::int64_t>(enumerate_cycle_classes(q, d).size());
}

/// T_p: the class of the p-fold concatenation.
inline CycleClass power_map(const CycleClass& c, int p) {
  if (p < 1) throw std::invalid_argument("power_map: power must be >= 1");
  std::vector<int> seq;
  seq.reserve(c.arrows.size() * p);
  for (int k = 0; k < p; ++k) seq.insert(seq.end(), c.arrows.begin(), c.arrows.end());
  const int r = least_rotation_index(seq);
  std::rotate(seq.begin(), seq.begin() + r, seq.end());
  return make_class(std::move(seq));
}

/// dim of the primitive part of HH_0 in degree d; this equals the Euler
/// characteristic computed by the direct count.
inline std::int64_t hh0_primitive_dim(const Quiver& q, const DimVector& d) {
  return count_primitive_classes(q, d);
}

}  // namespace qmod
