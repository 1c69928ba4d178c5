// Closed walks, cyclic equivalence, primitivity, and enumeration/counting of
// cycle classes by dimension vector.
#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "qmod/quiver.hpp"

namespace qmod {

/// A closed walk: base vertex plus a chained arrow sequence a_1..a_s (s >= 1)
/// with target(a_k) = source(a_{k+1}) and target(a_s) = base.
struct Cycle {
  int base = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
};

/// Validates chaining and closure.
inline Cycle make_cycle(const Quiver& q, int base, std::vector<int> arrows) {
  if (arrows.empty()) throw std::invalid_argument("cycle: empty arrow sequence");
  int at = base;
  for (int a : arrows) {
    const Arrow& ar = q.arrow(a);
    if (ar.src != at) throw std::invalid_argument("cycle: arrows do not chain");
    at = ar.tgt;
  }
  if (at != base) throw std::invalid_argument("cycle: walk does not close at base");
  return Cycle{base, std::move(arrows)};
}

/// Multiplicity of each arrow in the walk.
inline ArrowVector cycle_weight(const Quiver& q, const Cycle& c) {
  ArrowVector w = ArrowVector::zero(q.num_arrows());
  for (int a : c.arrows) ++w[a];
  return w;
}

/// Visit counts of the vertices i_0,...,i_{s-1}.
inline DimVector cycle_dim(const Quiver& q, const Cycle& c) {
  DimVector d = DimVector::zero(q.num_vertices());
  int at = c.base;
  for (int a : c.arrows) {
    ++d[at];
    at = q.arrow(a).tgt;
  }
  return d;
}

/// The cycle starting k steps along: (a_{k+1},...,a_s,a_1,...,a_k).
inline Cycle rotate(const Quiver& q, const Cycle& c, int k) {
  const int s = c.length();
  k = ((k % s) + s) % s;
  std::vector<int> seq(c.arrows.begin() + k, c.arrows.end());
  seq.insert(seq.end(), c.arrows.begin(), c.arrows.begin() + k);
  return Cycle{q.arrow(c.arrows[k]).src, std::move(seq)};
}

/// Booth's least-rotation algorithm: index k such that the rotation starting
/// at k is lexicographically minimal.
inline int least_rotation_index(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return 0;
  auto at = [&](int i) { return s[i % n]; };
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    int i = f[j - k - 1];
    while (i != -1 && at(j) != at(k + i + 1)) {
      if (at(j) < at(k + i + 1)) k = j - i - 1;
      i = f[i];
    }
    if (at(j) != at(k + i + 1)) {
      if (at(j) < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

namespace detail {

/// Smallest p such that rotating by p fixes the sequence; always divides s.
inline int rotation_period(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> fail(n, 0);
  for (int i = 1; i < n; ++i) {
    int j = fail[i - 1];
    while (j > 0 && s[i] != s[j]) j = fail[j - 1];
    if (s[i] == s[j]) ++j;
    fail[i] = j;
  }
  const int p = n - fail[n - 1];
  return (n % p == 0) ? p : n;
}

}  // namespace detail

/// A cycle up to rotation: the lexicographically minimal rotation of its
/// arrow-id sequence, with period and primitivity.
struct CycleClass {
  std::vector<int> arrows;  // canonical representative
  int period = 0;
  bool primitive = false;

  int length() const { return static_cast<int>(arrows.size()); }

  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.arrows == b.arrows;
  }
  friend bool operator<(const CycleClass& a, const CycleClass& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    return a.arrows < b.arrows;
  }
};

inline CycleClass make_class(std::vector<int> canonical_seq) {
  CycleClass c;
  c.period = detail::rotation_period(canonical_seq);
  c.primitive = (c.period == static_cast<int>(canonical_seq.size()));
  c.arrows = std::move(canonical_seq);
  return c;
}

inline CycleClass canonicalize(const Cycle& c) {
  const int k = least_rotation_index(c.arrows);
  std::vector<int> seq(c.arrows.begin() + k, c.arrows.end());
  seq.insert(seq.end(), c.arrows.begin(), c.arrows.begin() + k);
  return make_class(std::move(seq));
}

/// A representative cycle of the class in q.
inline Cycle class_representative(const Quiver& q, const CycleClass& c) {
  return make_cycle(q, q.arrow(c.arrows.front()).src, c.arrows);
}

inline ArrowVector class_weight(const Quiver& q, const CycleClass& c) {
  return cycle_weight(q, class_representative(q, c));
}

inline DimVector class_dim(const Quiver& q, const CycleClass& c) {
  return cycle_dim(q, class_representative(q, c));
}

namespace detail {

// Depth-first walk enumeration with per-vertex visit budgets. Walks start at
// `base`, never visit a vertex < base, and report each return to base; in
// exact mode a closure is reported only when every budget is used up.
struct CycleSearch {
  const Quiver& q;
  std::vector<std::int64_t> budget;
  int base = 0;
  bool exact = true;
  std::int64_t remaining_total = 0;
  std::vector<int> path;
  std::set<std::vector<int>>* found = nullptr;

  void run() {
    if (budget[base] <= 0) return;
    --budget[base];
    if (exact) --remaining_total;
    walk(base);
  }

  void walk(int v) {
    for (int a : q.arrows_out(v)) {
      const int w = q.arrow(a).tgt;
      if (w < base) continue;
      path.push_back(a);
      if (w == base && (!exact || remaining_total == 0)) {
        const int k = least_rotation_index(path);
        std::vector<int> seq(path.begin() + k, path.end());
        seq.insert(seq.end(), path.begin(), path.begin() + k);
        found->insert(std::move(seq));
      }
      if (budget[w] > 0) {
        --budget[w];
        if (exact) --remaining_total;
        walk(w);
        ++budget[w];
        if (exact) ++remaining_total;
      }
      path.pop_back();
    }
  }
};

}  // namespace detail

/// C_d(Q): all cyclic equivalence classes of cycles with dimension vector
/// exactly d. Sorted by (length, lexicographic).
inline std::vector<CycleClass> enumerate_cycle_classes(const Quiver& q, const DimVector& d) {
  if (d.size() != q.num_vertices())
    throw std::invalid_argument("enumerate_cycle_classes: size mismatch");
  std::vector<CycleClass> out;
  if (d.degree() < 1) return out;
  int base = -1;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (d[v] > 0) {
      base = v;
      break;
    }
  std::set<std::vector<int>> found;
  detail::CycleSearch s{q, d.v, base, true, d.degree(), {}, &found};
  s.run();
  for (auto& seq : found) out.push_back(make_class(seq));
  std::sort(out.begin(), out.end());
  return out;
}

/// All classes whose dimension vector is componentwise <= dmax (length >= 1).
inline std::vector<CycleClass> enumerate_cycles_bounded(const Quiver& q, const DimVector& dmax) {
  if (dmax.size() != q.num_vertices())
    throw std::invalid_argument("enumerate_cycles_bounded: size mismatch");
  std::set<std::vector<int>> found;
  for (int base = 0; base < q.num_vertices(); ++base) {
    if (dmax[base] <= 0) continue;
    detail::CycleSearch s{q, dmax.v, base, false, 0, {}, &found};
    s.run();
  }
  std::vector<CycleClass> out;
  out.reserve(found.size());
  for (auto& seq : found) out.push_back(make_class(seq));
  std::sort(out.begin(), out.end());
  return out;
}

/// All classes of length at most maxlen.
inline std::vector<CycleClass> enumerate_classes_up_to_length(const Quiver& q, int maxlen) {
  std::set<std::vector<int>> found;
  std::vector<int> path;
  auto walk = [&](auto&& self, int base, int v) -> void {
    for (int a : q.arrows_out(v)) {
      const int w = q.arrow(a).tgt;
      if (w < base) continue;
      path.push_back(a);
      if (w == base) {
        const int k = least_rotation_index(path);
        std::vector<int> seq(path.begin() + k, path.end());
        seq.insert(seq.end(), path.begin(), path.begin() + k);
        found.insert(std::move(seq));
      }
      if (static_cast<int>(path.size()) < maxlen) self(self, base, w);
      path.pop_back();
    }
  };
  for (int base = 0; base < q.num_vertices(); ++base) walk(walk, base, base);
  std::vector<CycleClass> out;
  out.reserve(found.size());
  for (auto& seq : found) out.push_back(make_class(seq));
  std::sort(out.begin(), out.end());
  return out;
}

/// |C_d^prim(Q)|.
inline std::int64_t count_primitive_classes(const Quiver& q, const DimVector& d) {
  std::int64_t n = 0;
  for (const CycleClass& c : enumerate_cycle_classes(q, d))
    if (c.primitive) ++n;
  return n;
}

/// Number-theoretic Moebius function, by trial-division factorization.
inline int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: argument must be positive");
  int factors = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

/// Primitive necklaces of length d over m letters:
/// (1/d) * sum_{r | d} mu(d/r) m^r.
inline std::int64_t necklace_count(std::int64_t m, std::int64_t d) {
  if (m < 1 || d < 1) throw std::invalid_argument("necklace_count: m, d must be >= 1");
  const __int128 limit = __int128{1} << 100;
  __int128 sum = 0;
  for (std::int64_t r = 1; r <= d; ++r) {
    if (d % r != 0) continue;
    __int128 pw = 1;
    for (std::int64_t k = 0; k < r; ++k) {
      if (pw > limit / m) throw std::overflow_error("necklace_count: overflow");
      pw *= m;
    }
    sum += __int128{moebius(d / r)} * pw;
  }
  if (sum % d != 0) throw std::logic_error("necklace_count: non-integer result");
  const __int128 res = sum / d;
  if (res < 0 || res > INT64_MAX) throw std::overflow_error("necklace_count: overflow");
  return static_cast<std::int64_t>(res);
}

}  // namespace qmod
