// Quivers (finite directed multigraphs), dimension vectors, arrow-indexed
// vectors, the Euler form and basic structural predicates.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmod {

struct Arrow {
  int src = 0;
  int tgt = 0;
  std::string label;
};

/// Finite directed multigraph. Loops and parallel arrows are permitted.
/// Vertices and arrows are dense integer indices; labels are I/O sugar.
/// The declared orderings are stable and define all lexicographic
/// comparisons downstream.
class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
      : vertex_labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
    const int n = static_cast<int>(vertex_labels_.size());
    out_.assign(n, {});
    in_.assign(n, {});
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
      const Arrow& ar = arrows_[a];
      if (ar.src < 0 || ar.src >= n || ar.tgt < 0 || ar.tgt >= n)
        throw std::invalid_argument("quiver: arrow endpoint out of range");
      if (ar.label.empty()) arrows_[a].label = "a" + std::to_string(a);
      out_[ar.src].push_back(a);
      in_[ar.tgt].push_back(a);
    }
  }

  Quiver(int num_vertices, std::vector<Arrow> arrows)
      : Quiver(default_labels(num_vertices), std::move(arrows)) {}

  int num_vertices() const { return static_cast<int>(vertex_labels_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<int>& arrows_out(int v) const { return out_.at(v); }
  const std::vector<int>& arrows_in(int v) const { return in_.at(v); }

  int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

  int vertex_by_label(const std::string& label) const {
    for (int v = 0; v < num_vertices(); ++v)
      if (vertex_labels_[v] == label) return v;
    throw std::invalid_argument("quiver: unknown vertex label '" + label + "'");
  }

  int arrow_by_label(const std::string& label) const {
    for (int a = 0; a < num_arrows(); ++a)
      if (arrows_[a].label == label) return a;
    throw std::invalid_argument("quiver: unknown arrow label '" + label + "'");
  }

  /// One vertex, m loops.
  static Quiver loop_quiver(int m) {
    std::vector<Arrow> as;
    for (int k = 0; k < m; ++k)
      as.push_back({0, 0, std::string(1, static_cast<char>('a' + k))});
    return Quiver(1, std::move(as));
  }

  /// Oriented n-cycle 0 -> 1 -> ... -> n-1 -> 0.
  static Quiver cycle_quiver(int n) {
    std::vector<Arrow> as;
    for (int v = 0; v < n; ++v)
      as.push_back({v, (v + 1) % n, "a" + std::to_string(v)});
    return Quiver(n, std::move(as));
  }

  /// Two vertices, m parallel arrows 0 -> 1.
  static Quiver kronecker_quiver(int m = 2) {
    std::vector<Arrow> as;
    for (int k = 0; k < m; ++k)
      as.push_back({0, 1, std::string(1, static_cast<char>('a' + k))});
    return Quiver(2, std::move(as));
  }

 private:
  static std::vector<std::string> default_labels(int n) {
    std::vector<std::string> ls(n);
    for (int v = 0; v < n; ++v) ls[v] = std::to_string(v);
    return ls;
  }

  std::vector<std::string> vertex_labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Nonnegative integer vector indexed by the vertices of a quiver.
struct DimVector {
  std::vector<std::int64_t> v;

  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> entries) : v(std::move(entries)) {}
  static DimVector zero(int n) { return DimVector(std::vector<std::int64_t>(n, 0)); }

  int size() const { return static_cast<int>(v.size()); }
  std::int64_t operator[](int i) const { return v.at(i); }
  std::int64_t& operator[](int i) { return v.at(i); }
  std::int64_t degree() const { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }
  bool is_zero() const {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }

  friend bool operator==(const DimVector& a, const DimVector& b) { return a.v == b.v; }
  friend bool operator<(const DimVector& a, const DimVector& b) { return a.v < b.v; }
};

/// Integer vector indexed by the arrows of a quiver.
struct ArrowVector {
  std::vector<std::int64_t> v;

  ArrowVector() = default;
  explicit ArrowVector(std::vector<std::int64_t> entries) : v(std::move(entries)) {}
  static ArrowVector zero(int n) { return ArrowVector(std::vector<std::int64_t>(n, 0)); }
  static ArrowVector unit(int n, int a) {
    ArrowVector u = zero(n);
    u.v.at(a) = 1;
    return u;
  }

  int size() const { return static_cast<int>(v.size()); }
  std::int64_t operator[](int i) const { return v.at(i); }
  std::int64_t& operator[](int i) { return v.at(i); }
  std::int64_t degree() const { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }
  bool is_zero() const {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
  }

  std::int64_t gcd() const {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x);
    return g;
  }

  /// gcd of the entries equals 1 (this is the condition on the vectors
  /// indexing covering quivers).
  bool is_indivisible() const { return gcd() == 1; }

  /// The vector divided by the gcd of its entries.
  ArrowVector primitive_part() const {
    const std::int64_t g = gcd();
    if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
    ArrowVector r = *this;
    for (auto& x : r.v) x /= g;
    return r;
  }

  friend ArrowVector operator+(const ArrowVector& a, const ArrowVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("arrow vector size mismatch");
    ArrowVector r = a;
    for (int i = 0; i < r.size(); ++i) r.v[i] += b.v[i];
    return r;
  }
  friend ArrowVector operator-(const ArrowVector& a, const ArrowVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("arrow vector size mismatch");
    ArrowVector r = a;
    for (int i = 0; i < r.size(); ++i) r.v[i] -= b.v[i];
    return r;
  }
  friend ArrowVector operator*(std::int64_t k, const ArrowVector& a) {
    ArrowVector r = a;
    for (auto& x : r.v) x *= k;
    return r;
  }

  friend bool operator==(const ArrowVector& a, const ArrowVector& b) { return a.v == b.v; }
  friend bool operator<(const ArrowVector& a, const ArrowVector& b) { return a.v < b.v; }
};

/// Euler form <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
inline std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
  if (d.size() != q.num_vertices() || e.size() != q.num_vertices())
    throw std::invalid_argument("euler_form: dimension vector does not match quiver");
  std::int64_t s = 0;
  for (int i = 0; i < q.num_vertices(); ++i) s += d[i] * e[i];
  for (const Arrow& a : q.arrows()) s -= d[a.src] * e[a.tgt];
  return s;
}

/// A quiver obtained by restricting to a vertex subset, together with the
/// index maps back into the parent.
struct Restriction {
  Quiver quiver;
  DimVector dims;                // parent dims restricted to the kept vertices
  std::vector<int> vertex_map;   // new vertex index -> parent vertex index
  std::vector<int> arrow_map;    // new arrow index -> parent arrow index
};

/// Full subquiver on {i : d_i > 0}, with orderings inherited.
inline Restriction restrict_to_support(const Quiver& q, const DimVector& d) {
  if (d.size() != q.num_vertices())
    throw std::invalid_argument("support: dimension vector does not match quiver");
  Restriction r;
  std::vector<int> new_index(q.num_vertices(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (d[v] > 0) {
      new_index[v] = static_cast<int>(r.vertex_map.size());
      r.vertex_map.push_back(v);
      labels.push_back(q.vertex_label(v));
      r.dims.v.push_back(d[v]);
    }
  }
  std::vector<Arrow> arrows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (new_index[ar.src] >= 0 && new_index[ar.tgt] >= 0) {
      arrows.push_back({new_index[ar.src], new_index[ar.tgt], ar.label});
      r.arrow_map.push_back(a);
    }
  }
  r.quiver = Quiver(std::move(labels), std::move(arrows));
  return r;
}

inline Quiver support(const Quiver& q, const DimVector& d) {
  return restrict_to_support(q, d).quiver;
}

/// True iff every ordered pair of vertices is joined by a directed path.
/// Empty quiver: false. Single vertex without arrows: true.
inline bool is_strongly_connected(const Quiver& q) {
  const int n = q.num_vertices();
  if (n == 0) return false;
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : (forward ? q.arrows_out(v) : q.arrows_in(v))) {
        int w = forward ? q.arrow(a).tgt : q.arrow(a).src;
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return reach(true) && reach(false);
}

inline bool has_arrow(const Quiver& q) { return q.num_arrows() > 0; }

/// True iff Q is a single oriented cycle (includes one vertex with one loop).
inline bool is_single_cycle(const Quiver& q) {
  if (q.num_vertices() == 0 || q.num_arrows() == 0) return false;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) != 1 || q.in_degree(v) != 1) return false;
  return is_strongly_connected(q);
}

/// Number of loops if Q is a one-vertex quiver whose arrows are all loops,
/// otherwise -1.
inline int loop_quiver_arity(const Quiver& q) {
  if (q.num_vertices() != 1) return -1;
  return q.num_arrows();
}

namespace detail {

inline std::string encode_permuted(const Quiver& q, const DimVector& d,
                                   const std::vector<int>& perm) {
  std::vector<std::int64_t> dims(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) dims[perm[v]] = d[v];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(q.num_arrows());
  for (const Arrow& a : q.arrows()) edges.emplace_back(perm[a.src], perm[a.tgt]);
  std::sort(edges.begin(), edges.end());
  std::string s;
  for (auto x : dims) {
    s += std::to_string(x);
    s += ',';
  }
  s += '|';
  for (auto [u, w] : edges) {
    s += std::to_string(u);
    s += '>';
    s += std::to_string(w);
    s += ',';
  }
  return s;
}

}  // namespace detail

/// Canonical encoding of the pair (Q, d) up to simultaneous relabeling of
/// vertices: the lexicographically minimal encoding over all vertex
/// permutations. Vertices are pre-grouped by (d_i, out-degree, in-degree)
/// so that only permutations within equal-signature groups are tried.
inline std::string canonical_key(const Quiver& q, const DimVector& d) {
  const int n = q.num_vertices();
  if (d.size() != n) throw std::invalid_argument("canonical_key: size mismatch");
  std::vector<std::tuple<std::int64_t, int, int, int>> sig(n);
  for (int v = 0; v < n; ++v) sig[v] = {d[v], q.out_degree(v), q.in_degree(v), v};
  std::sort(sig.begin(), sig.end());

  // perm[v] = canonical position of vertex v; start from the signature order
  // and run next_permutation within each equal-signature block.
  std::vector<int> order(n);
  for (int k = 0; k < n; ++k) order[k] = std::get<3>(sig[k]);
  std::vector<std::pair<int, int>> blocks;
  for (int k = 0; k < n;) {
    int j = k;
    while (j < n && std::get<0>(sig[j]) == std::get<0>(sig[k]) &&
           std::get<1>(sig[j]) == std::get<1>(sig[k]) &&
           std::get<2>(sig[j]) == std::get<2>(sig[k]))
      ++j;
    blocks.emplace_back(k, j);
    k = j;
  }

  std::string best;
  std::vector<int> perm(n);
  // Iterate the cartesian product of permutations of each block.
  std::vector<std::vector<int>> block_orders;
  for (auto [lo, hi] : blocks) {
    std::vector<int> ids(order.begin() + lo, order.begin() + hi);
    std::sort(ids.begin(), ids.end());
    block_orders.push_back(std::move(ids));
  }
  std::vector<std::vector<int>> current = block_orders;
  auto emit = [&]() {
    int pos = 0;
    for (const auto& blk : current)
      for (int v : blk) perm[v] = pos++;
    std::string s = detail::encode_permuted(q, d, perm);
    if (best.empty() || s < best) best = std::move(s);
  };
  // Depth-first over blocks; each block permutes independently.
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == current.size()) {
      emit();
      return;
    }
    std::sort(current[b].begin(), current[b].end());
    do {
      self(self, b + 1);
    } while (std::next_permutation(current[b].begin(), current[b].end()));
  };
  rec(rec, 0);
  return best;
}

}  // namespace qmod
