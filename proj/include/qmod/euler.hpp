// Euler characteristics of projectivized moduli of simples, computed two
// independent ways (primitive-cycle counting and localization over covering
// components), plus the executable form of the cycle-class bijection that
// makes the two agree.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/covering.hpp"
#include "qmod/cycles.hpp"
#include "qmod/moduli.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// chi_c of the projectivized moduli of simples: the number of cyclic
/// equivalence classes of primitive cycles of dimension vector d.
inline std::int64_t euler_direct(const Quiver& q, const DimVector& d) {
  return count_primitive_classes(q, d);
}

/// Cache of localization results keyed on the relabeling-canonical encoding
/// of (quiver, dimension vector). Component supports recur across branches
/// and across isomorphic inputs; inserts are idempotent.
struct EulerMemo {
  std::map<std::string, std::int64_t> table;
};

struct EulerTrace {
  enum class Kind { empty, base_case, recursion };

  DimVector d;
  std::int64_t chi = 0;
  Kind kind = Kind::empty;
  std::vector<std::pair<Component, EulerTrace>> children;  // recursion nodes only
};

namespace detail {

inline std::int64_t euler_localized_rec(const Quiver& q, const DimVector& d, EulerMemo* memo,
                                        EulerTrace* trace, int depth) {
  // Support strictly grows along the recursion while |d| is fixed, so the
  // depth can never exceed |d|; more indicates an enumeration bug.
  if (depth > d.degree() + 1)
    throw std::logic_error("euler_localized: recursion exceeded |d| levels");
  if (trace) trace->d = d;

  const NonemptyVerdict verdict = nonempty_simple_verdict(q, d);
  if (!verdict_nonempty(verdict)) {
    if (trace) {
      trace->kind = EulerTrace::Kind::empty;
      trace->chi = 0;
    }
    return 0;
  }
  if (verdict == NonemptyVerdict::single_cycle_dims_one) {
    // The moduli space of a single cycle with all entries 1 is a point. This
    // must be checked before enumerating components: such an input occurs as
    // its own trivial lift.
    if (trace) {
      trace->kind = EulerTrace::Kind::base_case;
      trace->chi = 1;
    }
    return 1;
  }

  std::string key;
  if (memo) {
    key = canonical_key(q, d);
    auto it = memo->table.find(key);
    if (it != memo->table.end() && !trace) return it->second;
  }

  std::int64_t total = 0;
  if (trace) trace->kind = EulerTrace::Kind::recursion;
  for (Component& c : enumerate_components(q, d)) {
    EulerTrace child;
    const std::int64_t chi =
        euler_localized_rec(c.quiver, c.dims, memo, trace ? &child : nullptr, depth + 1);
    total += chi;
    if (trace) trace->children.emplace_back(std::move(c), std::move(child));
  }
  if (memo) memo->table.emplace(std::move(key), total);
  if (trace) trace->chi = total;
  return total;
}

}  // namespace detail

/// chi_c via localization: 0 for empty moduli, 1 for the single-cycle base
/// case, otherwise the sum over fixed-point components of the same quantity
/// for the component's support quiver.
inline std::int64_t euler_localized(const Quiver& q, const DimVector& d,
                                    EulerMemo* memo = nullptr) {
  EulerMemo local;
  return detail::euler_localized_rec(q, d, memo ? memo : &local, nullptr, 0);
}

/// As euler_localized, but with the full recursion tree expanded (no cache
/// shortcuts), recording each component's contribution.
inline EulerTrace euler_localized_trace(const Quiver& q, const DimVector& d) {
  EulerTrace t;
  detail::euler_localized_rec(q, d, nullptr, &t, 0);
  return t;
}

/// One row of the bijection report: a fixed-point component (by key), how
/// many primitive classes of Q lift into it, and how many primitive classes
/// it has of its own.
struct BijectionTally {
  ArrowVector nu;
  std::vector<std::int64_t> dhat_key;
  std::int64_t lifted = 0;
  std::int64_t internal = 0;
  bool enumerated = false;
};

struct BijectionReport {
  std::int64_t total_primitive = 0;
  std::vector<BijectionTally> tallies;
  std::vector<std::string> discrepancies;

  bool consistent() const { return discrepancies.empty(); }
};

/// Lifts every primitive class of C_d(Q), groups the lifts by component, and
/// checks the grouping against the enumerated components: every lift must
/// land in an enumerated component, per-component lift counts must equal the
/// component's own primitive-class counts, and the totals must match the
/// direct count. Discrepancies are report content.
inline BijectionReport verify_cycle_bijection(const Quiver& q, const DimVector& d) {
  BijectionReport report;
  using Key = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;
  std::map<Key, std::size_t> index;

  auto tally_at = [&](const Key& k) -> BijectionTally& {
    auto it = index.find(k);
    if (it == index.end()) {
      it = index.emplace(k, report.tallies.size()).first;
      BijectionTally t;
      t.nu = ArrowVector{k.first};
      t.dhat_key = k.second;
      report.tallies.push_back(std::move(t));
    }
    return report.tallies[it->second];
  };

  for (Component& c : enumerate_components(q, d)) {
    BijectionTally& t = tally_at({c.nu.v, c.dhat.serialize()});
    t.enumerated = true;
    t.internal = count_primitive_classes(c.quiver, c.dims);
  }

  std::set<std::pair<Key, std::vector<int>>> seen_lifts;
  for (const CycleClass& c : enumerate_cycle_classes(q, d)) {
    if (!c.primitive) continue;
    ++report.total_primitive;
    LiftedCycle lift = lift_primitive_cycle(q, c);
    const Key key{lift.nu.v, lift.component.dhat.serialize()};
    if (!lift.cycle.primitive)
      report.discrepancies.push_back("lift of a primitive class is not primitive");
    if (!seen_lifts.insert({key, lift.cycle.arrows}).second)
      report.discrepancies.push_back("lift map is not injective");
    tally_at(key).lifted += 1;
  }

  std::int64_t internal_total = 0;
  for (const BijectionTally& t : report.tallies) {
    if (!t.enumerated && t.lifted > 0)
      report.discrepancies.push_back("a lift lands outside the enumerated components");
    if (t.enumerated) {
      internal_total += t.internal;
      if (t.lifted != t.internal)
        report.discrepancies.push_back(
            "component count mismatch: lifted " + std::to_string(t.lifted) + " vs internal " +
            std::to_string(t.internal));
    }
  }
  if (internal_total != report.total_primitive)
    report.discrepancies.push_back("component totals do not match the direct count");
  return report;
}

}  // namespace qmod
