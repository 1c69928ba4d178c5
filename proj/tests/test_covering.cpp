#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qmod/covering.hpp"
#include "qmod/euler.hpp"

using namespace qmod;

namespace {

// Independent oracle for coverings of the two-loop quiver. For nu = (p,q)
// with gcd(p,q) = 1, the residue group is identified with Z via
// (x,y) -> q*x - p*y, so arrow a steps by +q and arrow b steps by -p, and
// translation equivalence becomes shifting. Components are enumerated as
// normalized position sets (min = 0) with positive dimensions.
struct LineComponent {
  std::vector<std::int64_t> dims;  // by increasing position
  std::vector<int> positions;
  int arrows_a = 0;
  int arrows_b = 0;
};

std::vector<std::pair<std::vector<std::int64_t>, LineComponent>> twoloop_components_oracle(
    int n) {
  std::vector<std::pair<std::vector<std::int64_t>, LineComponent>> out;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q == 0 || std::gcd(p, q) != 1) continue;
      const int step_a = q, step_b = -p;
      const int window = 3 * std::max(p, q) + 1;
      // position sets containing 0 inside [0, window]
      std::vector<int> positions;
      auto build = [&](const std::vector<std::int64_t>& dims) {
        // quiver on the chosen positions
        std::map<int, int> idx;
        for (std::size_t i = 0; i < positions.size(); ++i) idx[positions[i]] = (int)i;
        std::vector<Arrow> arrows;
        int ca = 0, cb = 0;
        for (std::size_t i = 0; i < positions.size(); ++i) {
          if (idx.count(positions[i] + step_a)) {
            arrows.push_back({(int)i, idx[positions[i] + step_a], "a"});
            ++ca;
          }
          if (idx.count(positions[i] + step_b)) {
            arrows.push_back({(int)i, idx[positions[i] + step_b], "b"});
            ++cb;
          }
        }
        Quiver sup((int)positions.size(), arrows);
        if (is_nonempty_simple(sup, DimVector(dims)))
          out.push_back({{p, q}, {dims, positions, ca, cb}});
      };
      auto assign = [&](auto&& self, std::size_t i, std::int64_t left,
                        std::vector<std::int64_t>& dims) -> void {
        if (i + 1 == positions.size()) {
          if (left >= 1) {
            dims.push_back(left);
            build(dims);
            dims.pop_back();
          }
          return;
        }
        for (std::int64_t x = 1; left - x >= (std::int64_t)(positions.size() - i - 1); ++x) {
          dims.push_back(x);
          self(self, i + 1, left - x, dims);
          dims.pop_back();
        }
      };
      auto subsets = [&](auto&& self, int next, int remaining) -> void {
        if (!positions.empty() && positions.front() == 0) {
          std::vector<std::int64_t> dims;
          assign(assign, 0, n, dims);
        }
        if (remaining == 0 || next > window) return;
        for (int pos = next; pos <= window; ++pos) {
          positions.push_back(pos);
          self(self, pos + 1, remaining - 1);
          positions.pop_back();
        }
      };
      positions.clear();
      positions.push_back(0);
      subsets(subsets, 1, n - 1);
      positions.clear();
    }
  }
  // dedupe shifted duplicates: key on (nu, dims, position gaps)
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::pair<std::vector<std::int64_t>, LineComponent>> deduped;
  for (auto& [nu, c] : out) {
    std::vector<std::int64_t> key = {nu[0], nu[1]};
    for (std::size_t i = 0; i < c.positions.size(); ++i) {
      key.push_back(c.positions[i] - c.positions[0]);
      key.push_back(c.dims[i]);
    }
    if (seen.insert(key).second) deduped.push_back({nu, c});
  }
  return deduped;
}

std::vector<int> sorted_dims(const Component& c) {
  std::vector<int> ds(c.dims.v.begin(), c.dims.v.end());
  std::sort(ds.begin(), ds.end());
  return ds;
}

// multiset of base arrows covered by the component's arrows
std::vector<int> base_arrow_multiset(const Component& c) {
  std::vector<int> m = c.arrow_base;
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_SUITE("covering") {

TEST_CASE("residue reduction") {
  ArrowVector nu({1, 1});
  CHECK(residue_reduce(ArrowVector({3, 1}), nu).rep == std::vector<std::int64_t>{0, -2});
  CHECK(residue_reduce(nu, nu).rep == std::vector<std::int64_t>{0, 0});
  CHECK(residue_reduce(ArrowVector({3, 0}), ArrowVector({2, 1})).rep ==
        std::vector<std::int64_t>{1, -1});
  // the difference to the input is an integer multiple of nu
  CHECK(ArrowVector({3, 0}) - ArrowVector({1, -1}) == ArrowVector({2, 1}));
}

TEST_CASE("residue reduction rejects bad moduli") {
  CHECK_THROWS_AS(residue_reduce(ArrowVector({1, 0}), ArrowVector({0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(residue_reduce(ArrowVector({1, 0}), ArrowVector({2, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(residue_reduce(ArrowVector({1, 0}), ArrowVector({-1, 2})),
                  std::invalid_argument);
}

TEST_CASE("residue reduction is a bijection onto canonical representatives") {
  ArrowVector nu({2, 3});
  for (std::int64_t x = -5; x <= 5; ++x)
    for (std::int64_t y = -5; y <= 5; ++y) {
      Residue r = residue_reduce(ArrowVector({x, y}), nu);
      CHECK(r.rep[0] >= 0);
      CHECK(r.rep[0] < 2);
      // reducing the representative is the identity
      CHECK(residue_reduce(ArrowVector{r.rep}, nu) == r);
      // shifting by nu does not change the class
      CHECK(residue_reduce(ArrowVector({x + 2, y + 3}), nu) == r);
    }
}

TEST_CASE("covering arrows from a vertex of the two-loop covering") {
  Quiver q = Quiver::loop_quiver(2);
  ArrowVector nu({1, 1});
  CoveringVertex v{0, residue_zero(nu)};
  auto steps = covering_arrows_from(q, nu, v);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].base_arrow == 0);
  CHECK(steps[0].target.res.rep == std::vector<std::int64_t>{0, -1});  // class of (1,0)
  CHECK(steps[1].base_arrow == 1);
  CHECK(steps[1].target.res.rep == std::vector<std::int64_t>{0, 1});  // class of (0,1)
  CHECK_FALSE(steps[0].target == steps[1].target);
}

TEST_CASE("sink vertices have no outgoing covering arrows") {
  Quiver q = Quiver::kronecker_quiver();
  // make a cycle so that a modulus exists, then ask at the sink
  Quiver q2(2, {{0, 1, "a"}, {0, 1, "b"}, {1, 0, "c"}});
  ArrowVector nu({1, 0, 1});
  CHECK(covering_arrows_from(q2, nu, {1, residue_zero(nu)}).size() == 1);
  (void)q;
}

TEST_CASE("a loop survives when nu is concentrated on it") {
  Quiver q = Quiver::loop_quiver(2);
  ArrowVector nu({1, 0});
  CoveringVertex v{0, residue_zero(nu)};
  auto steps = covering_arrows_from(q, nu, v);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].target == v);        // arrow a is a loop in this covering
  CHECK_FALSE(steps[1].target == v);  // arrow b moves
}

TEST_CASE("candidate moduli for the two-loop quiver at degree 4") {
  auto nus = candidate_nus(Quiver::loop_quiver(2), DimVector({4}));
  std::set<std::vector<std::int64_t>> got;
  for (const ArrowVector& nu : nus) got.insert(nu.v);
  std::set<std::vector<std::int64_t>> expected = {
      {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
  CHECK(got == expected);
}

TEST_CASE("candidate moduli trivial cases") {
  CHECK(candidate_nus(Quiver::kronecker_quiver(), DimVector({2, 2})).empty());
  auto nus = candidate_nus(Quiver::loop_quiver(1), DimVector({3}));
  REQUIRE(nus.size() == 1);
  CHECK(nus[0] == ArrowVector({1}));
}

TEST_CASE("canonicalize_lift is idempotent and collapses translates") {
  Quiver q = Quiver::loop_quiver(2);
  ArrowVector nu({1, 1});
  // support at line positions {5,6,7} with dims (1,2,1); position n has
  // canonical representative (0,-n)
  LiftedDimVector lift;
  lift.nu = nu;
  lift.entries[{0, Residue{{0, -5}}}] = 1;
  lift.entries[{0, Residue{{0, -6}}}] = 2;
  lift.entries[{0, Residue{{0, -7}}}] = 1;
  LiftedDimVector canon = canonicalize_lift(lift);
  // canonical translate sits at positions {0,1,2} with dims (1,2,1)
  std::map<std::int64_t, std::int64_t> by_position;
  for (auto& [v, m] : canon.entries) by_position[-v.res.rep[1]] = m;
  CHECK(by_position == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 2}, {2, 1}});
  CHECK(canonicalize_lift(canon) == canon);
  for (std::int64_t s = -3; s <= 3; ++s) {
    LiftedDimVector shifted = translate_lift(canon, ArrowVector({s, 0}));
    CHECK(canonicalize_lift(shifted) == canon);
  }
}

TEST_CASE("canonical lift is a translation-orbit invariant") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> small(1, 3);
  std::uniform_int_distribution<std::int64_t> shift(-4, 4);
  Quiver q = Quiver::loop_quiver(2);
  for (const auto& nu : {ArrowVector({1, 1}), ArrowVector({2, 1}), ArrowVector({1, 3})}) {
    for (int trial = 0; trial < 40; ++trial) {
      LiftedDimVector lift;
      lift.nu = nu;
      const int size = small(rng);
      while (static_cast<int>(lift.entries.size()) < size) {
        Residue r = residue_reduce(ArrowVector({shift(rng), shift(rng)}), nu);
        lift.entries[{0, r}] = small(rng);
      }
      LiftedDimVector canon = canonicalize_lift(lift);
      for (int k = 0; k < 5; ++k) {
        ArrowVector mu({shift(rng), shift(rng)});
        CHECK(canonicalize_lift(translate_lift(lift, mu)) == canon);
      }
      CHECK(lift_base_dims(q, canon) == lift_base_dims(q, lift));
    }
  }
}

TEST_CASE("two-loop degree 4: the six components have the expected shapes") {
  Quiver q = Quiver::loop_quiver(2);
  auto comps = enumerate_components(q, DimVector({4}));

  // hand-derived component table, as
  // (nu, sorted dims, multiset of covered base arrows)
  struct Expected {
    std::vector<std::int64_t> nu;
    std::vector<int> dims;
    std::vector<int> cover;
  };
  std::vector<Expected> expected = {
      {{1, 1}, {1, 1, 2}, {0, 0, 1, 1}},      // line 1-2-1, two a two b
      {{1, 1}, {1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}},  // line of four, all ones
      {{1, 2}, {1, 1, 1, 1}, {0, 0, 1, 1, 1}},     // zig-zag, two a three b
      {{3, 1}, {1, 1, 1, 1}, {0, 0, 0, 1}},        // four-cycle, three a one b
      {{1, 3}, {1, 1, 1, 1}, {0, 1, 1, 1}},        // four-cycle, one a three b
  };
  for (const Expected& e : expected) {
    bool found = false;
    for (const Component& c : comps)
      if (c.nu.v == e.nu && sorted_dims(c) == e.dims && base_arrow_multiset(c) == e.cover)
        found = true;
    CHECK_MESSAGE(found, "missing component with nu = (", e.nu[0], ",", e.nu[1], ")");
  }

  // The mirror zig-zag also satisfies the non-emptiness criterion:
  // nu = (2,1), all dims 1, three arrows over a and two over b. Swapping the
  // loops maps it to the (1,2) zig-zag, so both must appear.
  bool mirror = false;
  for (const Component& c : comps)
    if (c.nu.v == std::vector<std::int64_t>{2, 1} &&
        sorted_dims(c) == std::vector<int>{1, 1, 1, 1} &&
        base_arrow_multiset(c) == std::vector<int>{0, 0, 0, 1, 1})
      mirror = true;
  CHECK(mirror);
  CHECK(comps.size() == 6);
}

TEST_CASE("two-loop components match the independent line oracle") {
  Quiver q = Quiver::loop_quiver(2);
  for (int n = 2; n <= 4; ++n) {
    auto lib = enumerate_components(q, DimVector({n}));
    auto oracle = twoloop_components_oracle(n);
    REQUIRE_MESSAGE(lib.size() == oracle.size(), "degree ", n);
    // compare as multisets of (nu, sorted dims, #arrows over a, #arrows over b)
    auto lib_keys = [&] {
      std::multiset<std::vector<std::int64_t>> keys;
      for (const Component& c : lib) {
        std::vector<std::int64_t> k = {c.nu[0], c.nu[1]};
        auto ds = sorted_dims(c);
        k.insert(k.end(), ds.begin(), ds.end());
        std::int64_t ca = 0, cb = 0;
        for (int a : c.arrow_base) (a == 0 ? ca : cb)++;
        k.push_back(ca);
        k.push_back(cb);
        keys.insert(k);
      }
      return keys;
    }();
    std::multiset<std::vector<std::int64_t>> oracle_keys;
    for (auto& [nu, c] : oracle) {
      std::vector<std::int64_t> k = {nu[0], nu[1]};
      std::vector<std::int64_t> ds = c.dims;
      std::sort(ds.begin(), ds.end());
      k.insert(k.end(), ds.begin(), ds.end());
      k.push_back(c.arrows_a);
      k.push_back(c.arrows_b);
      oracle_keys.insert(k);
    }
    CHECK(lib_keys == oracle_keys);
  }
}

TEST_CASE("oriented 3-cycle lifts to itself") {
  Quiver q = Quiver::cycle_quiver(3);
  auto comps = enumerate_components(q, DimVector({1, 1, 1}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].nu == ArrowVector({1, 1, 1}));
  CHECK(is_single_cycle(comps[0].quiver));
  CHECK(comps[0].dims == DimVector({1, 1, 1}));
}

TEST_CASE("no components without cycles") {
  CHECK(enumerate_components(Quiver::kronecker_quiver(), DimVector({1, 1})).empty());
}

TEST_CASE("lift of (a,b) on the two-loop quiver") {
  Quiver q = Quiver::loop_quiver(2);
  CycleClass c = canonicalize(make_cycle(q, 0, {0, 1}));
  LiftedCycle lc = lift_primitive_cycle(q, c);
  CHECK(lc.nu == ArrowVector({1, 1}));
  CHECK(lc.component.quiver.num_vertices() == 2);
  CHECK(lc.cycle.length() == 2);
  CHECK(lc.cycle.primitive);
  CHECK(is_single_cycle(lc.component.quiver));
}

TEST_CASE("lift of (a,a,a,b) is the four-cycle component") {
  Quiver q = Quiver::loop_quiver(2);
  CycleClass c = canonicalize(make_cycle(q, 0, {0, 0, 0, 1}));
  LiftedCycle lc = lift_primitive_cycle(q, c);
  CHECK(lc.nu == ArrowVector({3, 1}));
  CHECK(lc.component.quiver.num_vertices() == 4);
  CHECK(is_single_cycle(lc.component.quiver));
  std::vector<int> covered = base_arrow_multiset(lc.component);
  CHECK(covered == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("an oriented cycle lifts trivially over its own weight") {
  Quiver q = Quiver::cycle_quiver(4);
  CycleClass c = canonicalize(make_cycle(q, 0, {0, 1, 2, 3}));
  LiftedCycle lc = lift_primitive_cycle(q, c);
  CHECK(lc.nu == ArrowVector({1, 1, 1, 1}));
  CHECK(lc.component.quiver.num_vertices() == 4);
  CHECK(is_single_cycle(lc.component.quiver));
}

TEST_CASE("lift rejects non-primitive classes") {
  Quiver q = Quiver::loop_quiver(2);
  CycleClass c = canonicalize(make_cycle(q, 0, {0, 1, 0, 1}));
  CHECK_THROWS_AS(lift_primitive_cycle(q, c), std::invalid_argument);
}

TEST_CASE("project after lift returns the original class") {
  Quiver twoloop = Quiver::loop_quiver(2);
  Quiver atype({"i", "j", "k"},
               {{0, 1, "alpha"}, {1, 0, "delta"}, {1, 2, "beta"}, {2, 1, "gamma"}});
  std::vector<std::pair<Quiver, DimVector>> cases = {
      {Quiver::loop_quiver(1), DimVector({1})},
      {twoloop, DimVector({3})},
      {twoloop, DimVector({4})},
      {Quiver::cycle_quiver(3), DimVector({1, 1, 1})},
      {atype, DimVector({1, 2, 1})},
  };
  for (const auto& [q, d] : cases) {
    for (const CycleClass& c : enumerate_cycle_classes(q, d)) {
      if (!c.primitive) continue;
      LiftedCycle lc = lift_primitive_cycle(q, c);
      Cycle back = project_cycle(lc.component, lc.cycle);
      CHECK(canonicalize(back) == c);
      // dimension vector of the lift sums to the base one over fibers
      CHECK(lift_base_dims(q, lc.component.dhat) == d);
    }
  }
}

TEST_CASE("a single covering loop projects to the base loop") {
  Quiver q = Quiver::loop_quiver(2);
  // nu concentrated on loop a makes a-arrows loops in the covering
  auto comps = enumerate_components(Quiver::loop_quiver(1), DimVector({1}));
  REQUIRE(comps.size() == 1);
  CycleClass loop = canonicalize(make_cycle(comps[0].quiver, 0, {0}));
  Cycle back = project_cycle(comps[0], loop);
  CHECK(back.arrows == std::vector<int>{0});
  (void)q;
}

TEST_CASE("support growth dichotomy") {
  // every enumerated component is either a single all-ones cycle or has
  // strictly larger support than the input
  std::vector<std::pair<Quiver, DimVector>> cases = {
      {Quiver::loop_quiver(2), DimVector({4})},
      {Quiver::loop_quiver(2), DimVector({3})},
      {Quiver::loop_quiver(3), DimVector({3})},
      {Quiver::cycle_quiver(3), DimVector({1, 1, 1})},
  };
  for (const auto& [q, d] : cases) {
    const int base_support = support(q, d).num_vertices();
    for (const Component& c : enumerate_components(q, d)) {
      const bool all_ones =
          std::all_of(c.dims.v.begin(), c.dims.v.end(), [](auto x) { return x == 1; });
      const bool single_cycle = is_single_cycle(c.quiver) && all_ones;
      if (!single_cycle) CHECK(c.quiver.num_vertices() > base_support);
    }
  }
}

TEST_CASE("component quivers always pass the non-emptiness test") {
  for (const Component& c : enumerate_components(Quiver::loop_quiver(2), DimVector({4})))
    CHECK(is_nonempty_simple(c.quiver, c.dims));
}

TEST_CASE("components respect the loop-swap automorphism") {
  // swapping the two loops is a quiver automorphism, so the multiset of
  // component keys must be invariant under swapping the nu coordinates and
  // the covered-arrow tags
  Quiver q = Quiver::loop_quiver(2);
  for (int n = 2; n <= 4; ++n) {
    std::multiset<std::vector<std::int64_t>> keys, swapped;
    for (const Component& c : enumerate_components(q, DimVector({n}))) {
      auto dims = sorted_dims(c);
      std::int64_t over_a = 0, over_b = 0;
      for (int a : c.arrow_base) (a == 0 ? over_a : over_b)++;
      std::vector<std::int64_t> key = {c.nu[0], c.nu[1], over_a, over_b};
      std::vector<std::int64_t> mirror = {c.nu[1], c.nu[0], over_b, over_a};
      for (int x : dims) {
        key.push_back(x);
        mirror.push_back(x);
      }
      keys.insert(key);
      swapped.insert(mirror);
    }
    CHECK(keys == swapped);
  }
}

}
