// Non-emptiness criterion for projectivized moduli of simple representations
// and the dimension formulas.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qmod/quiver.hpp"

namespace qmod {

enum class NonemptyVerdict {
  empty_dimension_vector,
  support_not_strongly_connected,
  support_has_no_arrow,
  single_cycle_dims_one,       // non-empty
  single_cycle_dims_too_big,   // empty
  inequalities_hold,           // non-empty
  inequality_fails,            // empty
};

inline bool verdict_nonempty(NonemptyVerdict v) {
  return v == NonemptyVerdict::single_cycle_dims_one ||
         v == NonemptyVerdict::inequalities_hold;
}

inline std::string verdict_text(NonemptyVerdict v) {
  switch (v) {
    case NonemptyVerdict::empty_dimension_vector: return "dimension vector is zero";
    case NonemptyVerdict::support_not_strongly_connected:
      return "support is not strongly connected";
    case NonemptyVerdict::support_has_no_arrow: return "support contains no arrow";
    case NonemptyVerdict::single_cycle_dims_one:
      return "support is a single cycle with all entries 1";
    case NonemptyVerdict::single_cycle_dims_too_big:
      return "support is a single cycle but some entry exceeds 1";
    case NonemptyVerdict::inequalities_hold:
      return "<i,d> <= 0 and <d,i> <= 0 on the support";
    case NonemptyVerdict::inequality_fails:
      return "some <i,d> or <d,i> is positive on the support";
  }
  return "?";
}

/// Decides non-emptiness of the projectivized moduli of simples and reports
/// which clause fired. The support must be strongly connected and contain an
/// arrow; then a single-cycle support requires all entries equal to 1, and
/// any other support requires <i,d> <= 0 and <d,i> <= 0 for all supported i
/// (forms computed inside the support). The two clauses are exclusive: a
/// single-cycle support with constant d > 1 would satisfy the inequalities
/// vacuously (all forms vanish) but carries no simple representation, as the
/// classification of simples of the cyclic quiver shows.
inline NonemptyVerdict nonempty_simple_verdict(const Quiver& q, const DimVector& d) {
  if (d.size() != q.num_vertices())
    throw std::invalid_argument("nonempty_simple: size mismatch");
  for (int v = 0; v < q.num_vertices(); ++v)
    if (d[v] < 0) throw std::invalid_argument("nonempty_simple: negative entry");
  if (d.is_zero()) return NonemptyVerdict::empty_dimension_vector;

  const Restriction sup = restrict_to_support(q, d);
  if (!has_arrow(sup.quiver)) return NonemptyVerdict::support_has_no_arrow;
  if (!is_strongly_connected(sup.quiver))
    return NonemptyVerdict::support_not_strongly_connected;

  if (is_single_cycle(sup.quiver)) {
    for (int v = 0; v < sup.quiver.num_vertices(); ++v)
      if (sup.dims[v] != 1) return NonemptyVerdict::single_cycle_dims_too_big;
    return NonemptyVerdict::single_cycle_dims_one;
  }

  for (int v = 0; v < sup.quiver.num_vertices(); ++v) {
    // <e_v, d> = d_v - sum over arrows v->w of d_w, inside the support.
    std::int64_t left = sup.dims[v];
    for (int a : sup.quiver.arrows_out(v)) left -= sup.dims[sup.quiver.arrow(a).tgt];
    std::int64_t right = sup.dims[v];
    for (int a : sup.quiver.arrows_in(v)) right -= sup.dims[sup.quiver.arrow(a).src];
    if (left > 0 || right > 0) return NonemptyVerdict::inequality_fails;
  }
  return NonemptyVerdict::inequalities_hold;
}

inline bool is_nonempty_simple(const Quiver& q, const DimVector& d) {
  return verdict_nonempty(nonempty_simple_verdict(q, d));
}

struct ModuliDims {
  std::int64_t affine = 0;         // 1 - <d,d>
  std::int64_t projectivized = 0;  // -<d,d>
};

inline ModuliDims moduli_dims(const Quiver& q, const DimVector& d) {
  if (!is_nonempty_simple(q, d)) throw std::domain_error("moduli empty");
  const std::int64_t dd = euler_form(q, d, d);
  return ModuliDims{1 - dd, -dd};
}

}  // namespace qmod
