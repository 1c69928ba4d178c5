// Almost universal abelian covering quivers, residue arithmetic modulo an
// indivisible arrow vector, enumeration of torus-fixed-point components
// (nu, lifted dimension vector) up to translation, and cycle lifting /
// projection between a quiver and its coverings.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/cycles.hpp"
#include "qmod/moduli.hpp"
#include "qmod/quiver.hpp"

namespace qmod {

/// Canonical representative of a class in ZQ_1 / Z*nu. The representative's
/// pivot coordinate (first arrow index with nu != 0) lies in [0, nu_pivot);
/// translates change that coordinate by multiples of nu_pivot, so each class
/// has exactly one such representative.
struct Residue {
  std::vector<std::int64_t> rep;

  friend bool operator==(const Residue& a, const Residue& b) { return a.rep == b.rep; }
  friend bool operator<(const Residue& a, const Residue& b) { return a.rep < b.rep; }
};

inline void check_modulus(const ArrowVector& nu) {
  if (nu.is_zero() || !nu.is_nonnegative() || !nu.is_indivisible())
    throw std::invalid_argument("covering: modulus must be nonnegative, nonzero, indivisible");
}

inline int pivot_index(const ArrowVector& nu) {
  for (int i = 0; i < nu.size(); ++i)
    if (nu[i] != 0) return i;
  throw std::invalid_argument("pivot_index: zero vector");
}

namespace detail {
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace detail

/// The canonical representative of lambda mod Z*nu.
inline Residue residue_reduce(const ArrowVector& lambda, const ArrowVector& nu) {
  check_modulus(nu);
  if (lambda.size() != nu.size())
    throw std::invalid_argument("residue_reduce: size mismatch");
  const int p = pivot_index(nu);
  const std::int64_t k = detail::floor_div(lambda[p], nu[p]);
  ArrowVector r = lambda - k * nu;
  return Residue{std::move(r.v)};
}

inline Residue residue_zero(const ArrowVector& nu) {
  return residue_reduce(ArrowVector::zero(nu.size()), nu);
}

/// reduce(rep + delta).
inline Residue residue_shift(const Residue& r, const ArrowVector& delta, const ArrowVector& nu) {
  ArrowVector l{r.rep};
  return residue_reduce(l + delta, nu);
}

inline std::string residue_text(const Residue& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.rep.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.rep[i]);
  }
  s += ")";
  return s;
}

/// A vertex (i, lambda-bar) of the covering quiver.
struct CoveringVertex {
  int base = 0;
  Residue res;

  friend bool operator==(const CoveringVertex& a, const CoveringVertex& b) {
    return a.base == b.base && a.res == b.res;
  }
  friend bool operator<(const CoveringVertex& a, const CoveringVertex& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.res < b.res;
  }
};

struct CoveringStep {
  int base_arrow = 0;
  CoveringVertex target;
};

/// The covering arrows leaving v: one per base arrow out of base(v), ending
/// at (tgt, res + arrow). The infinite covering quiver is never materialized.
inline std::vector<CoveringStep> covering_arrows_from(const Quiver& q, const ArrowVector& nu,
                                                      const CoveringVertex& v) {
  std::vector<CoveringStep> out;
  for (int a : q.arrows_out(v.base)) {
    const Arrow& ar = q.arrow(a);
    out.push_back({a, {ar.tgt, residue_shift(v.res, ArrowVector::unit(nu.size(), a), nu)}});
  }
  return out;
}

/// The covering arrows entering v: one per base arrow into base(v), starting
/// at (src, res - arrow).
inline std::vector<CoveringStep> covering_arrows_into(const Quiver& q, const ArrowVector& nu,
                                                      const CoveringVertex& v) {
  std::vector<CoveringStep> out;
  for (int a : q.arrows_in(v.base)) {
    const Arrow& ar = q.arrow(a);
    ArrowVector minus = ArrowVector::zero(nu.size());
    minus[a] = -1;
    out.push_back({a, {ar.src, residue_shift(v.res, minus, nu)}});
  }
  return out;
}

/// A dimension vector for a covering quiver lifting d: positive entries on
/// finitely many covering vertices, with fiber sums reproducing d.
struct LiftedDimVector {
  ArrowVector nu;
  std::map<CoveringVertex, std::int64_t> entries;

  std::int64_t degree() const {
    std::int64_t s = 0;
    for (auto& [v, m] : entries) s += m;
    return s;
  }

  /// Flattened (base, representative..., multiplicity) triples in vertex
  /// order; equality of serializations is equality of lifts.
  std::vector<std::int64_t> serialize() const {
    std::vector<std::int64_t> s;
    for (auto& [v, m] : entries) {
      s.push_back(v.base);
      s.insert(s.end(), v.res.rep.begin(), v.res.rep.end());
      s.push_back(m);
    }
    return s;
  }

  friend bool operator==(const LiftedDimVector& a, const LiftedDimVector& b) {
    return a.nu == b.nu && a.entries == b.entries;
  }
};

/// Fiber sums: the base dimension vector this lift projects to.
inline DimVector lift_base_dims(const Quiver& q, const LiftedDimVector& L) {
  DimVector d = DimVector::zero(q.num_vertices());
  for (auto& [v, m] : L.entries) d[v.base] += m;
  return d;
}

/// The translate of L by mu (the ZQ_1 action on covering vertices).
inline LiftedDimVector translate_lift(const LiftedDimVector& L, const ArrowVector& mu) {
  LiftedDimVector out;
  out.nu = L.nu;
  for (auto& [v, m] : L.entries)
    out.entries[{v.base, residue_shift(v.res, mu, L.nu)}] = m;
  return out;
}

/// Canonical representative of the translation orbit of L, together with the
/// shift that produces it. Only translates placing the zero residue over the
/// smallest supported base vertex need to be compared: those are exactly the
/// orbit elements anchored there, and the translation group acts simply
/// transitively on each fiber.
inline std::pair<LiftedDimVector, ArrowVector> canonicalize_lift_with_shift(
    const LiftedDimVector& L) {
  if (L.entries.empty()) throw std::invalid_argument("canonicalize_lift: empty lift");
  const int i0 = L.entries.begin()->first.base;  // map order: smallest base first
  std::optional<std::vector<std::int64_t>> best;
  LiftedDimVector best_lift;
  ArrowVector best_mu;
  for (auto& [v, m] : L.entries) {
    if (v.base != i0) continue;
    ArrowVector mu = ArrowVector::zero(L.nu.size()) - ArrowVector{v.res.rep};
    LiftedDimVector cand = translate_lift(L, mu);
    auto s = cand.serialize();
    if (!best || s < *best) {
      best = std::move(s);
      best_lift = std::move(cand);
      best_mu = std::move(mu);
    }
  }
  return {best_lift, best_mu};
}

inline LiftedDimVector canonicalize_lift(const LiftedDimVector& L) {
  return canonicalize_lift_with_shift(L).first;
}

/// One torus-fixed-point component: an indivisible nu together with a
/// canonical lifted dimension vector, realized as a finite quiver (the full
/// subquiver of the covering on the support of the lift) whose arrows are
/// tagged with the base arrow they cover.
struct Component {
  Quiver base_quiver;
  ArrowVector nu;
  LiftedDimVector dhat;                  // canonical
  Quiver quiver;                         // support quiver
  DimVector dims;                        // dhat aligned with quiver vertices
  std::vector<CoveringVertex> vertices;  // quiver vertex index -> covering vertex
  std::vector<int> arrow_base;           // quiver arrow index -> base arrow id

  int vertex_index(const CoveringVertex& v) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
      if (vertices[i] == v) return i;
    return -1;
  }
};

/// Builds the support quiver of a lift. Arrows are ordered by (source vertex,
/// base arrow), which is deterministic given the canonical lift.
inline Component make_component(const Quiver& q, const ArrowVector& nu,
                                const LiftedDimVector& dhat) {
  Component c;
  c.base_quiver = q;
  c.nu = nu;
  c.dhat = dhat;
  std::map<CoveringVertex, int> index;
  std::vector<std::string> labels;
  for (auto& [v, m] : dhat.entries) {
    index[v] = static_cast<int>(c.vertices.size());
    c.vertices.push_back(v);
    c.dims.v.push_back(m);
    labels.push_back(q.vertex_label(v.base) + "@" + residue_text(v.res));
  }
  std::vector<Arrow> arrows;
  for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i) {
    for (const CoveringStep& st : covering_arrows_from(q, nu, c.vertices[i])) {
      auto it = index.find(st.target);
      if (it == index.end()) continue;
      arrows.push_back(
          {i, it->second, q.arrow(st.base_arrow).label + "@" + residue_text(c.vertices[i].res)});
      c.arrow_base.push_back(st.base_arrow);
    }
  }
  c.quiver = Quiver(std::move(labels), std::move(arrows));
  return c;
}

/// The finitely many nu that can index a non-empty component for (Q, d): a
/// non-empty component's support is strongly connected with an arrow, hence
/// contains a cycle; that cycle projects to a cycle of Q with dimension
/// vector <= d whose weight is an integer multiple of nu. So nu is the
/// primitive part of the weight of such a cycle.
inline std::vector<ArrowVector> candidate_nus(const Quiver& q, const DimVector& d) {
  std::set<ArrowVector> nus;
  for (const CycleClass& c : enumerate_cycles_bounded(q, d))
    nus.insert(class_weight(q, c).primitive_part());
  return {nus.begin(), nus.end()};
}

namespace detail {

// Positive integer compositions of total into exactly parts parts.
inline void compositions(std::int64_t total, int parts, std::vector<std::int64_t>& cur,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (std::int64_t first = 1; first + parts - 1 <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

struct ComponentSearch {
  const Quiver& q;
  const DimVector& d;
  ArrowVector nu;
  std::int64_t max_size = 0;
  std::map<std::vector<std::int64_t>, LiftedDimVector>* found = nullptr;

  // Explored covering vertices are interned to dense ids so that the set
  // arithmetic below works on ints rather than residue vectors.
  std::vector<CoveringVertex> by_id;
  std::map<CoveringVertex, int> ids;
  std::vector<std::vector<int>> out_cache;  // supported out-neighbors
  std::vector<std::vector<int>> nbr_cache;  // supported undirected neighbors

  int intern(const CoveringVertex& v) {
    auto it = ids.find(v);
    if (it != ids.end()) return it->second;
    const int id = static_cast<int>(by_id.size());
    ids.emplace(v, id);
    by_id.push_back(v);
    return id;
  }

  void fill_caches(int id) {
    while (static_cast<int>(out_cache.size()) <= id) {
      const int v = static_cast<int>(out_cache.size());
      std::vector<int> outs, all;
      for (const CoveringStep& st : covering_arrows_from(q, nu, by_id[v]))
        if (d[st.target.base] > 0) {
          const int w = intern(st.target);
          outs.push_back(w);
          all.push_back(w);
        }
      for (const CoveringStep& st : covering_arrows_into(q, nu, by_id[v]))
        if (d[st.target.base] > 0) all.push_back(intern(st.target));
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      out_cache.push_back(std::move(outs));
      nbr_cache.push_back(std::move(all));
    }
  }

  const std::vector<int>& neighbors(int id) {
    fill_caches(id);
    return nbr_cache[id];
  }

  const std::vector<int>& out_neighbors(int id) {
    fill_caches(id);
    return out_cache[id];
  }

  void process(const std::set<int>& s) {
    std::vector<std::int64_t> fiber_count(q.num_vertices(), 0);
    for (int v : s) ++fiber_count[by_id[v].base];
    for (int i = 0; i < q.num_vertices(); ++i)
      if ((d[i] > 0) != (fiber_count[i] > 0)) return;

    // The induced graph on s does not depend on the dimension assignment, so
    // the strong-connectivity and single-cycle parts of the non-emptiness
    // criterion are settled once per set; only the Euler-form inequalities
    // (or the all-ones requirement) vary with the assignment. This mirrors
    // nonempty_simple_verdict, which the enumerated output is tested against.
    const int n = static_cast<int>(s.size());
    std::vector<int> verts(s.begin(), s.end());
    std::vector<int> local(by_id.size(), -1);
    for (int i = 0; i < n; ++i) local[verts[i]] = i;
    std::vector<std::vector<int>> out_adj(n), in_adj(n);
    for (int i = 0; i < n; ++i)
      for (int w : out_neighbors(verts[i])) {
        if (w >= static_cast<int>(local.size()) || local[w] < 0) continue;
        out_adj[i].push_back(local[w]);
        in_adj[local[w]].push_back(i);
      }
    auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int count = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            ++count;
            stack.push_back(w);
          }
      }
      return count == n;
    };
    int arrow_count = 0;
    for (int i = 0; i < n; ++i) arrow_count += static_cast<int>(out_adj[i].size());
    if (arrow_count == 0) return;
    if (!reaches_all(out_adj) || !reaches_all(in_adj)) return;
    bool single_cycle = true;
    for (int i = 0; i < n; ++i)
      if (out_adj[i].size() != 1 || in_adj[i].size() != 1) single_cycle = false;

    if (single_cycle) {
      // only the all-ones assignment can work, and it needs |s| = |d|
      if (static_cast<std::int64_t>(n) != d.degree()) return;
      LiftedDimVector lift;
      lift.nu = nu;
      for (int v : s) lift.entries[by_id[v]] = 1;
      accept(lift);
      return;
    }

    // Per supported vertex, the ways of distributing d_i over its fiber.
    std::vector<std::vector<int>> fibers(q.num_vertices());
    for (int i = 0; i < n; ++i) fibers[by_id[verts[i]].base].push_back(i);
    std::vector<std::vector<std::vector<std::int64_t>>> choices;
    std::vector<int> supported;
    for (int i = 0; i < q.num_vertices(); ++i) {
      if (d[i] == 0) continue;
      supported.push_back(i);
      std::vector<std::vector<std::int64_t>> comps;
      std::vector<std::int64_t> cur;
      compositions(d[i], static_cast<int>(fibers[i].size()), cur, comps);
      if (comps.empty()) return;
      choices.push_back(std::move(comps));
    }

    std::vector<std::size_t> pick(supported.size(), 0);
    std::vector<std::int64_t> dims(n, 0);
    while (true) {
      for (std::size_t k = 0; k < supported.size(); ++k) {
        const auto& fiber = fibers[supported[k]];
        const auto& comp = choices[k][pick[k]];
        for (std::size_t j = 0; j < fiber.size(); ++j) dims[fiber[j]] = comp[j];
      }
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        std::int64_t left = dims[i], right = dims[i];
        for (int w : out_adj[i]) left -= dims[w];
        for (int w : in_adj[i]) right -= dims[w];
        if (left > 0 || right > 0) ok = false;
      }
      if (ok) {
        LiftedDimVector lift;
        lift.nu = nu;
        for (int i = 0; i < n; ++i) lift.entries[by_id[verts[i]]] = dims[i];
        accept(lift);
      }
      // advance the mixed-radix counter
      std::size_t k = 0;
      while (k < pick.size()) {
        if (++pick[k] < choices[k].size()) break;
        pick[k] = 0;
        ++k;
      }
      if (k == pick.size()) break;
    }
  }

  void accept(const LiftedDimVector& lift) {
    LiftedDimVector canon = canonicalize_lift(lift);
    auto key = canon.serialize();
    found->emplace(std::move(key), std::move(canon));
  }

  // Enumerates every connected vertex set containing the current set exactly
  // once: each candidate is either included (and its new neighbors join the
  // frontier) or permanently excluded for the rest of this branch.
  void extend(std::set<int>& s, std::vector<int> frontier, std::set<int> banned) {
    process(s);
    if (static_cast<std::int64_t>(s.size()) >= max_size) return;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.erase(frontier.begin());
      if (fiber_full(s, by_id[v].base)) {
        banned.insert(v);
        continue;
      }
      std::vector<int> next = frontier;
      s.insert(v);
      for (int w : neighbors(v)) {
        if (s.count(w) || banned.count(w)) continue;
        if (std::find(next.begin(), next.end(), w) == next.end()) next.push_back(w);
      }
      extend(s, std::move(next), banned);
      s.erase(v);
      banned.insert(v);
    }
  }

  bool fiber_full(const std::set<int>& s, int base) const {
    std::int64_t n = 0;
    for (int v : s)
      if (by_id[v].base == base) ++n;
    return n >= d[base];
  }

  void run() {
    int seed_base = -1;
    for (int i = 0; i < q.num_vertices(); ++i)
      if (d[i] > 0) {
        seed_base = i;
        break;
      }
    if (seed_base < 0) return;
    const int seed = intern({seed_base, residue_zero(nu)});
    std::set<int> s{seed};
    extend(s, neighbors(seed), {});
  }
};

}  // namespace detail

/// All non-empty fixed-point components for (Q, d), one per translation
/// equivalence class of lifts, sorted by (nu, canonical lift).
inline std::vector<Component> enumerate_components(const Quiver& q, const DimVector& d) {
  if (d.size() != q.num_vertices())
    throw std::invalid_argument("enumerate_components: size mismatch");
  std::vector<Component> out;
  if (d.degree() < 1) return out;
  for (const ArrowVector& nu : candidate_nus(q, d)) {
    std::map<std::vector<std::int64_t>, LiftedDimVector> found;
    detail::ComponentSearch search{q, d, nu, d.degree(), &found, {}, {}, {}, {}};
    search.run();
    for (auto& [key, lift] : found) out.push_back(make_component(q, nu, lift));
  }
  return out;
}

/// A primitive cycle class of a covering-quiver component, remembered with
/// the component it lives in.
struct LiftedCycle {
  ArrowVector nu;
  Component component;
  CycleClass cycle;  // class in component.quiver
};

/// Lifts a primitive cycle class to the covering indexed by the primitive
/// part of its weight. The lift starts at (base, 0) and follows residues;
/// it closes because the weight is an integer multiple of nu. The resulting
/// lifted dimension vector is canonicalized.
inline LiftedCycle lift_primitive_cycle(const Quiver& q, const CycleClass& c) {
  if (!c.primitive)
    throw std::invalid_argument("lift_primitive_cycle: class is not primitive");
  const Cycle rep = class_representative(q, c);
  const ArrowVector nu = cycle_weight(q, rep).primitive_part();

  std::vector<CoveringVertex> walk;  // visited covering vertices, length s
  CoveringVertex at{rep.base, residue_zero(nu)};
  LiftedDimVector lift;
  lift.nu = nu;
  for (int a : rep.arrows) {
    walk.push_back(at);
    ++lift.entries[at];
    at = {q.arrow(a).tgt, residue_shift(at.res, ArrowVector::unit(nu.size(), a), nu)};
  }
  if (!(at == walk.front()))
    throw std::logic_error("lift_primitive_cycle: lift did not close");

  auto [canon, mu] = canonicalize_lift_with_shift(lift);
  LiftedCycle out;
  out.nu = nu;
  out.component = make_component(q, nu, canon);

  // Map the translated walk into the component and canonicalize there.
  std::map<std::pair<int, int>, int> arrow_at;  // (source vertex, base arrow) -> arrow
  for (int e = 0; e < out.component.quiver.num_arrows(); ++e)
    arrow_at[{out.component.quiver.arrow(e).src, out.component.arrow_base[e]}] = e;
  std::vector<int> lifted_arrows;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    CoveringVertex v{walk[k].base, residue_shift(walk[k].res, mu, nu)};
    const int vi = out.component.vertex_index(v);
    if (vi < 0) throw std::logic_error("lift_primitive_cycle: walk left the support");
    auto it = arrow_at.find({vi, rep.arrows[k]});
    if (it == arrow_at.end())
      throw std::logic_error("lift_primitive_cycle: missing covering arrow");
    lifted_arrows.push_back(it->second);
  }
  const int start = out.component.vertex_index(
      {walk[0].base, residue_shift(walk[0].res, mu, nu)});
  out.cycle = canonicalize(make_cycle(out.component.quiver, start, lifted_arrows));
  return out;
}

/// Replaces each covering arrow by the base arrow it covers.
inline Cycle project_cycle(const Component& comp, const CycleClass& chat) {
  const Cycle rep = class_representative(comp.quiver, chat);
  std::vector<int> arrows;
  arrows.reserve(rep.arrows.size());
  for (int e : rep.arrows) arrows.push_back(comp.arrow_base.at(e));
  return make_cycle(comp.base_quiver, comp.vertices.at(rep.base).base, std::move(arrows));
}

}  // namespace qmod
