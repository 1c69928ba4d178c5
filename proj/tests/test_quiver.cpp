#include <doctest.h>

#include <random>

#include "qmod/quiver.hpp"

using namespace qmod;

namespace {

// The four-arrow quiver i <-> j <-> k (arrows alpha: i->j, delta: j->i,
// beta: j->k, gamma: k->j).
Quiver atype_quiver() {
  return Quiver({"i", "j", "k"},
                {{0, 1, "alpha"}, {1, 0, "delta"}, {1, 2, "beta"}, {2, 1, "gamma"}});
}

}  // namespace

TEST_SUITE("quiver") {

TEST_CASE("euler form on the two-loop quiver") {
  Quiver q = Quiver::loop_quiver(2);
  DimVector d({4});
  CHECK(euler_form(q, d, d) == -16);
}

TEST_CASE("euler form vanishes against zero") {
  Quiver q = atype_quiver();
  DimVector d({2, 5, 1});
  CHECK(euler_form(q, d, DimVector::zero(3)) == 0);
  CHECK(euler_form(q, DimVector::zero(3), d) == 0);
}

TEST_CASE("euler form on the A-tilde quiver") {
  Quiver q = atype_quiver();
  DimVector d({1, 1, 1});
  CHECK(euler_form(q, d, d) == -1);
}

TEST_CASE("euler form rejects mismatched sizes") {
  Quiver q = Quiver::loop_quiver(1);
  CHECK_THROWS_AS(euler_form(q, DimVector({1, 2}), DimVector({1})), std::invalid_argument);
}

TEST_CASE("euler form is bilinear") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(0, 4);
  Quiver q = atype_quiver();
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_dim = [&] {
      DimVector d = DimVector::zero(3);
      for (int i = 0; i < 3; ++i) d[i] = dim(rng);
      return d;
    };
    DimVector a = rand_dim(), b = rand_dim(), c = rand_dim();
    DimVector ab = a;
    for (int i = 0; i < 3; ++i) ab[i] += b[i];
    CHECK(euler_form(q, ab, c) == euler_form(q, a, c) + euler_form(q, b, c));
    CHECK(euler_form(q, c, ab) == euler_form(q, c, a) + euler_form(q, c, b));
  }
}

TEST_CASE("support keeps the loop") {
  Quiver q({"i", "j"}, {{1, 1, "l"}});
  Quiver s = support(q, DimVector({0, 2}));
  CHECK(s.num_vertices() == 1);
  CHECK(s.num_arrows() == 1);
  CHECK(s.vertex_label(0) == "j");
  CHECK(is_single_cycle(s));
}

TEST_CASE("support with full support returns the quiver itself") {
  Quiver q = atype_quiver();
  Quiver s = support(q, DimVector({1, 2, 3}));
  CHECK(s.num_vertices() == q.num_vertices());
  CHECK(s.num_arrows() == q.num_arrows());
}

TEST_CASE("support of zero is empty") {
  Quiver q = atype_quiver();
  Quiver s = support(q, DimVector::zero(3));
  CHECK(s.num_vertices() == 0);
  CHECK(s.num_arrows() == 0);
}

TEST_CASE("support vertex count equals number of nonzero entries") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(0, 2);
  Quiver q = atype_quiver();
  for (int trial = 0; trial < 30; ++trial) {
    DimVector d = DimVector::zero(3);
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      d[i] = dim(rng);
      if (d[i] > 0) ++nonzero;
    }
    CHECK(support(q, d).num_vertices() == nonzero);
  }
}

TEST_CASE("strong connectivity") {
  CHECK_FALSE(is_strongly_connected(Quiver::kronecker_quiver()));
  CHECK(is_strongly_connected(Quiver::cycle_quiver(3)));
  CHECK(is_strongly_connected(atype_quiver()));
  CHECK_FALSE(is_strongly_connected(Quiver(0, {})));
  CHECK(is_strongly_connected(Quiver(1, {})));
}

TEST_CASE("single cycle detection") {
  CHECK(is_single_cycle(Quiver::loop_quiver(1)));
  CHECK(is_single_cycle(Quiver::cycle_quiver(4)));
  CHECK_FALSE(is_single_cycle(Quiver::loop_quiver(2)));
  CHECK_FALSE(is_single_cycle(Quiver(1, {})));
  // two disjoint loops: degrees are right but not connected
  CHECK_FALSE(is_single_cycle(Quiver(2, {{0, 0, "a"}, {1, 1, "b"}})));
}

TEST_CASE("single cycle implies strongly connected") {
  std::vector<Quiver> qs = {Quiver::loop_quiver(1), Quiver::cycle_quiver(2),
                            Quiver::cycle_quiver(5), Quiver::loop_quiver(3),
                            Quiver::kronecker_quiver(), atype_quiver()};
  for (const Quiver& q : qs)
    if (is_single_cycle(q)) CHECK(is_strongly_connected(q));
}

TEST_CASE("arrow vector gcd structure") {
  ArrowVector v({4, 6});
  CHECK(v.gcd() == 2);
  CHECK_FALSE(v.is_indivisible());
  CHECK(v.primitive_part() == ArrowVector({2, 3}));
  CHECK(ArrowVector({3, 1}).is_indivisible());
  CHECK_THROWS_AS(ArrowVector({0, 0}).primitive_part(), std::invalid_argument);
}

TEST_CASE("canonical key identifies relabeled quivers") {
  // oriented 3-cycle with two different labelings, same dims up to the
  // relabeling
  Quiver a(3, {{0, 1, "x"}, {1, 2, "y"}, {2, 0, "z"}});
  Quiver b(3, {{1, 0, "x"}, {0, 2, "y"}, {2, 1, "z"}});  // swap vertices 0,1
  CHECK(canonical_key(a, DimVector({1, 2, 3})) == canonical_key(b, DimVector({2, 1, 3})));
  CHECK(canonical_key(a, DimVector({1, 2, 3})) != canonical_key(b, DimVector({1, 2, 3})));
  CHECK(canonical_key(Quiver::loop_quiver(2), DimVector({4})) !=
        canonical_key(Quiver::loop_quiver(3), DimVector({4})));
}

}
