// Exact-arithmetic quiver representations: string representations, traces
// along cycles, base change and torus rescaling, nilpotency and bounded
// trace-vanishing tests, brute-force simplicity, endomorphism computation,
// and the pushforward from a covering component to the base quiver.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qmod/covering.hpp"
#include "qmod/cycles.hpp"
#include "qmod/linalg.hpp"
#include "qmod/quiver.hpp"
#include "qmod/scalar.hpp"

namespace qmod {

/// A point of R_d(Q): one d_tgt x d_src matrix per arrow, over a fixed field.
struct Representation {
  Quiver q;
  DimVector d;
  FieldTag field;
  std::vector<Matrix> x;

  static Representation zero(const Quiver& q, const DimVector& d, FieldTag f) {
    if (d.size() != q.num_vertices())
      throw std::invalid_argument("representation: dimension vector does not match quiver");
    Representation r{q, d, f, {}};
    for (const Arrow& a : q.arrows())
      r.x.emplace_back(f, static_cast<int>(d[a.tgt]), static_cast<int>(d[a.src]));
    return r;
  }

  void check_shapes() const {
    if (static_cast<int>(x.size()) != q.num_arrows())
      throw std::invalid_argument("representation: wrong number of matrices");
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (x[a].rows() != d[q.arrow(a).tgt] || x[a].cols() != d[q.arrow(a).src])
        throw std::invalid_argument("representation: matrix shape mismatch");
      if (x[a].field() != field)
        throw std::invalid_argument("representation: field mismatch");
    }
  }

  bool is_zero() const {
    for (const Matrix& m : x)
      if (!m.is_zero()) return false;
    return true;
  }
};

/// The string representation of a cycle: one basis vector b_k per cycle
/// position, with the arrow at position k+1 sending b_k to b_{k+1 mod s} and
/// every other arrow acting by zero on b_k. Simple whenever the cycle is
/// primitive.
inline Representation string_rep(const Quiver& q, const Cycle& c, FieldTag f = {}) {
  const DimVector d = cycle_dim(q, c);
  Representation r = Representation::zero(q, d, f);
  const int s = c.length();
  // local index of position k inside V_{i_k}: its rank among equal vertices
  std::vector<int> vertex_at(s), local(s);
  {
    int at = c.base;
    std::vector<int> seen(q.num_vertices(), 0);
    for (int k = 0; k < s; ++k) {
      vertex_at[k] = at;
      local[k] = seen[at]++;
      at = q.arrow(c.arrows[k]).tgt;
    }
  }
  for (int k = 0; k < s; ++k) {
    const int a = c.arrows[k];
    const int next = (k + 1) % s;
    r.x[a].at(local[next], local[k]) = Scalar::one(f);
  }
  return r;
}

/// t_omega(X) = tr(X_{a_s} ... X_{a_1}), composed right to left.
inline Scalar trace_along_cycle(const Representation& X, const Cycle& c) {
  if (c.arrows.empty()) throw std::invalid_argument("trace_along_cycle: empty cycle");
  Matrix p = X.x.at(c.arrows[0]);
  for (std::size_t k = 1; k < c.arrows.size(); ++k) p = X.x.at(c.arrows[k]) * p;
  return p.trace();
}

/// (g_i)_i . (X_a)_a = (g_j X_a g_i^{-1}). Cycle traces are invariant.
inline Representation base_change(const Representation& X, const std::vector<Matrix>& g) {
  if (static_cast<int>(g.size()) != X.q.num_vertices())
    throw std::invalid_argument("base_change: need one matrix per vertex");
  std::vector<Matrix> ginv;
  for (int i = 0; i < X.q.num_vertices(); ++i) {
    if (g[i].rows() != X.d[i] || g[i].cols() != X.d[i])
      throw std::invalid_argument("base_change: shape mismatch");
    auto inv = inverse(g[i]);
    if (!inv) throw std::invalid_argument("base_change: singular matrix");
    ginv.push_back(std::move(*inv));
  }
  Representation r = X;
  for (int a = 0; a < X.q.num_arrows(); ++a) {
    const Arrow& ar = X.q.arrow(a);
    r.x[a] = g[ar.tgt] * X.x[a] * ginv[ar.src];
  }
  return r;
}

/// (X_a).t = (t_a * X_a): the torus action rescaling the arrows. Transforms
/// each cycle trace by the character prod_a t_a^{|omega|_a}.
inline Representation torus_rescale(const Representation& X, const std::vector<Scalar>& t) {
  if (static_cast<int>(t.size()) != X.q.num_arrows())
    throw std::invalid_argument("torus_rescale: need one scalar per arrow");
  Representation r = X;
  for (int a = 0; a < X.q.num_arrows(); ++a) {
    if (t[a].is_zero()) throw std::invalid_argument("torus_rescale: zero scalar");
    r.x[a] = t[a] * X.x[a];
  }
  return r;
}

/// Membership in the nullcone, decided by the descending chain
/// U^0_j = V_j, U^k_j = sum over arrows i->j of X_a U^{k-1}_i. The chain
/// is decreasing, and strictly so until it stabilizes, so it reaches zero
/// within |d| steps iff it ever does; that happens iff all Jordan-Hoelder
/// factors of X are vertex simples.
inline bool is_nilpotent(const Representation& X) {
  const int n = X.q.num_vertices();
  std::vector<Matrix> u;
  for (int j = 0; j < n; ++j)
    u.push_back(Matrix::identity(X.field, static_cast<int>(X.d[j])));
  const std::int64_t steps = X.d.degree();
  if (steps == 0) return true;  // the chain starts at zero
  for (std::int64_t step = 0; step < steps; ++step) {
    std::vector<Matrix> next;
    int total = 0, prev_total = 0;
    for (int j = 0; j < n; ++j) {
      prev_total += u[j].rows();
      Matrix stacked(X.field, 0, static_cast<int>(X.d[j]));
      for (int a : X.q.arrows_in(j))
        stacked = vstack(stacked, u[X.q.arrow(a).src] * X.x[a].transpose());
      next.push_back(row_basis(std::move(stacked)));
      total += next.back().rows();
    }
    u = std::move(next);
    if (total == 0) return true;
    if (total == prev_total) return false;  // stabilized above zero
  }
  return false;
}

/// Whether t_omega(X) = 0 for every cycle class of length at most
/// |d|^2 + 1. Over the rationals this is equivalent to nilpotency; the
/// length bound is the classical degree bound for the trace generators of
/// the invariant ring, and the equivalence is exercised against
/// is_nilpotent rather than trusted alone.
inline bool traces_vanish_bounded(const Representation& X) {
  if (!X.field.is_rational())
    throw std::domain_error("traces_vanish_bounded: characteristic-zero test only");
  const std::int64_t total = X.d.degree();
  const int bound = static_cast<int>(total * total + 1);
  for (const CycleClass& c : enumerate_classes_up_to_length(X.q, bound))
    if (!trace_along_cycle(X, class_representative(X.q, c)).is_zero()) return false;
  return true;
}

/// Smallest arrow-stable tuple of subspaces containing v at the given
/// vertex; each subspace is returned as an RREF row basis.
inline std::vector<Matrix> generated_subrep(const Representation& X, int vertex,
                                            const std::vector<Scalar>& v) {
  if (vertex < 0 || vertex >= X.q.num_vertices())
    throw std::invalid_argument("generated_subrep: bad vertex");
  if (static_cast<int>(v.size()) != X.d[vertex])
    throw std::invalid_argument("generated_subrep: bad vector length");
  std::vector<Matrix> bases;
  for (int j = 0; j < X.q.num_vertices(); ++j)
    bases.emplace_back(X.field, 0, static_cast<int>(X.d[j]));
  {
    Matrix seed(X.field, 1, static_cast<int>(v.size()));
    for (std::size_t c = 0; c < v.size(); ++c) seed.at(0, static_cast<int>(c)) = v[c];
    bases[vertex] = row_basis(std::move(seed));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < X.q.num_arrows(); ++a) {
      const Arrow& ar = X.q.arrow(a);
      if (bases[ar.src].rows() == 0) continue;
      Matrix image = bases[ar.src] * X.x[a].transpose();
      Matrix merged = row_basis(vstack(bases[ar.tgt], image));
      if (merged.rows() > bases[ar.tgt].rows()) {
        bases[ar.tgt] = std::move(merged);
        changed = true;
      }
    }
  }
  return bases;
}

/// Exhaustive simplicity test over a prime field: the representation is
/// simple iff d != 0 and every nonzero vector at every vertex generates the
/// whole representation (a proper nonzero subrepresentation would contain
/// some nonzero vector generating at most itself).
inline bool is_simple_bruteforce(const Representation& X) {
  if (X.field.is_rational())
    throw std::invalid_argument("is_simple_bruteforce: requires a prime field");
  std::int64_t enumeration_size = 0;
  for (int i = 0; i < X.q.num_vertices(); ++i) {
    std::int64_t count = 1;
    for (std::int64_t k = 0; k < X.d[i]; ++k) {
      count *= X.field.p;
      if (count > (1 << 20)) break;
    }
    enumeration_size += count;
    if (enumeration_size > (1 << 20))
      throw std::domain_error("instance too large for brute force");
  }
  if (X.d.is_zero()) return false;

  for (int i = 0; i < X.q.num_vertices(); ++i) {
    const int di = static_cast<int>(X.d[i]);
    if (di == 0) continue;
    std::vector<std::int64_t> digits(di, 0);
    while (true) {
      // advance the base-p counter
      int k = 0;
      while (k < di && digits[k] == X.field.p - 1) digits[k++] = 0;
      if (k == di) break;
      ++digits[k];
      std::vector<Scalar> v;
      v.reserve(di);
      for (std::int64_t dig : digits) v.push_back(Scalar::fp(dig, X.field.p));
      const std::vector<Matrix> sub = generated_subrep(X, i, v);
      for (int j = 0; j < X.q.num_vertices(); ++j)
        if (sub[j].rows() != X.d[j]) return false;
    }
  }
  return true;
}

/// Dimension of the space of tuples (g_i) with X_a g_i = g_j X_a for every
/// arrow a: i -> j, by exact null-space computation.
inline std::int64_t endomorphism_dim(const Representation& X) {
  const int n = X.q.num_vertices();
  std::vector<int> offset(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[i + 1] = offset[i] + static_cast<int>(X.d[i] * X.d[i]);
  const int unknowns = offset[n];
  int equations = 0;
  for (const Arrow& a : X.q.arrows())
    equations += static_cast<int>(X.d[a.tgt] * X.d[a.src]);
  if (unknowns == 0) return 0;
  Matrix m(X.field, equations, unknowns);
  int row = 0;
  for (int a = 0; a < X.q.num_arrows(); ++a) {
    const int i = X.q.arrow(a).src, j = X.q.arrow(a).tgt;
    const int di = static_cast<int>(X.d[i]), dj = static_cast<int>(X.d[j]);
    for (int r = 0; r < dj; ++r)
      for (int c = 0; c < di; ++c) {
        // (X_a g_i - g_j X_a)_{r,c} = 0
        for (int k = 0; k < di; ++k)
          m.at(row, offset[i] + k * di + c) =
              m.at(row, offset[i] + k * di + c) + X.x[a].at(r, k);
        for (int k = 0; k < dj; ++k)
          m.at(row, offset[j] + r * dj + k) =
              m.at(row, offset[j] + r * dj + k) - X.x[a].at(k, c);
        ++row;
      }
  }
  return unknowns - rank(std::move(m));
}

/// Assembles a representation of the base quiver from a representation of a
/// component's support quiver: V_i is the direct sum of the fibers over i,
/// and the block of X_a from fiber lambda to fiber lambda+a is the matrix of
/// the covering arrow (a, lambda); all other blocks are zero.
inline Representation covering_pushforward(const Component& comp, const Representation& xhat) {
  if (xhat.q.num_vertices() != comp.quiver.num_vertices() ||
      xhat.q.num_arrows() != comp.quiver.num_arrows() ||
      comp.arrow_base.size() != static_cast<std::size_t>(comp.quiver.num_arrows()))
    throw std::invalid_argument("covering_pushforward: representation does not match component");
  for (int e = 0; e < xhat.q.num_arrows(); ++e)
    if (xhat.q.arrow(e).src != comp.quiver.arrow(e).src ||
        xhat.q.arrow(e).tgt != comp.quiver.arrow(e).tgt)
      throw std::invalid_argument("covering_pushforward: arrow mismatch");

  const Quiver& base = comp.base_quiver;
  DimVector d = DimVector::zero(base.num_vertices());
  std::vector<int> block_offset(comp.quiver.num_vertices(), 0);
  for (int k = 0; k < comp.quiver.num_vertices(); ++k) {
    block_offset[k] = static_cast<int>(d[comp.vertices[k].base]);
    d[comp.vertices[k].base] += xhat.d[k];
  }
  Representation out = Representation::zero(base, d, xhat.field);
  for (int e = 0; e < comp.quiver.num_arrows(); ++e) {
    const int a = comp.arrow_base[e];
    const int u = comp.quiver.arrow(e).src, w = comp.quiver.arrow(e).tgt;
    for (int r = 0; r < xhat.x[e].rows(); ++r)
      for (int c = 0; c < xhat.x[e].cols(); ++c)
        out.x[a].at(block_offset[w] + r, block_offset[u] + c) = xhat.x[e].at(r, c);
  }
  return out;
}

}  // namespace qmod
