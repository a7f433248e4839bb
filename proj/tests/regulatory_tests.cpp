#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "bnsat/dynamics.hpp"
#include "bnsat/regulatory.hpp"
#include "test_util.hpp"

using namespace bnsat;
using namespace bnsat::testing;

TEST_CASE("global regulatory graphs of the fixture maps") {
  // f(x1,x2) = (x2, x1(1-x2)): activation both ways plus a negative loop on 2.
  CHECK(global_graph(conjugate_demo_f()).edges() ==
        std::vector<SignedEdge>{{1, 2, 1}, {2, 1, 1}, {2, 2, -1}});
  // g(x1,x2) = ((1-x1)(1-x2), 1-x1): all interactions inhibitory.
  CHECK(global_graph(conjugate_demo_g()).edges() ==
        std::vector<SignedEdge>{{1, 1, -1}, {1, 2, -1}, {2, 1, -1}});
  CHECK(global_graph(long_path3_map()).edges() ==
        std::vector<SignedEdge>{{1, 3, 1},
                                {2, 1, -1},
                                {2, 3, 1},
                                {3, 1, -1},
                                {3, 2, 1},
                                {3, 3, 1}});
  CHECK(global_graph(negcircuit3_map()).edges() ==
        std::vector<SignedEdge>{
            {1, 2, 1}, {1, 3, -1}, {2, 3, 1}, {3, 1, -1}, {3, 3, 1}});
  // Identity copies every input, which is a positive loop on each coordinate.
  CHECK(global_graph(BooleanMap::identity(3)).edges() ==
        std::vector<SignedEdge>{{1, 1, 1}, {2, 2, 1}, {3, 3, 1}});
  CHECK(global_graph(BooleanMap::negation(2)).edges() ==
        std::vector<SignedEdge>{{1, 1, -1}, {2, 2, -1}});
}

TEST_CASE("local graph signs") {
  // f(x1,x2) = (1, x1): f_2 copies x_1, so 1 -> 2 everywhere; no other edge.
  BooleanMap f = chain2_map();
  for (Word w = 0; w < 4; ++w) {
    LocalGraph g = local_graph(f, State(w, 2));
    CHECK(g.edges() == std::vector<SignedEdge>{{1, 2, 1}});
    CHECK(g.sign(1, 2) == 1);
    CHECK(g.sign(2, 1) == 0);
    CHECK_FALSE(g.has_edge(2, 2));
  }
  // The union of local graphs is the global graph, with every local edge
  // present globally.
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    BooleanMap h = random_map(rng, 3);
    GlobalGraph global = global_graph(h);
    for (Word w = 0; w < 8; ++w)
      for (const SignedEdge& e : local_graph(h, State(w, 3)).edges())
        CHECK(global.has_edge(e.source, e.target, e.sign));
  }
  CHECK(dump_edges(local_graph(f, origin(2))) == "1 -> 2 +\n");
}

TEST_CASE("circuit canonical form") {
  Circuit c({2, 3, 1});
  CHECK(c.nodes() == std::vector<int>{1, 2, 3});
  CHECK(c == Circuit({1, 2, 3}));
  CHECK(c != Circuit({1, 3, 2}));
  CHECK(c.length() == 3);
  CHECK(c.edge(0) == std::pair<int, int>(1, 2));
  CHECK(c.edge(2) == std::pair<int, int>(3, 1));
  CHECK(c.to_string() == "1 -> 2 -> 3 -> 1");
  CHECK(Circuit({2}).to_string() == "2 -> 2");
  CHECK_THROWS_AS(Circuit({1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit({}), std::invalid_argument);
}

TEST_CASE("circuit enumeration counts C(n,k)*(k-1)! summed") {
  CHECK(enumerate_circuits(1).size() == 1);
  CHECK(enumerate_circuits(2).size() == 3);
  CHECK(enumerate_circuits(3).size() == 8);
  CHECK(enumerate_circuits(4).size() == 24);
  CHECK(enumerate_circuits(5).size() == 89);
  CHECK(enumerate_circuits(6).size() == 415);
  CHECK(enumerate_circuits(7).size() == 2372);

  // Each circuit appears exactly once, in canonical form.
  std::vector<Circuit> all = enumerate_circuits(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].nodes()[0] ==
          *std::min_element(all[i].nodes().begin(), all[i].nodes().end()));
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  }
}

TEST_CASE("circuit sign evaluation") {
  LocalGraph g(3);
  g.set_sign(1, 2, 1);
  g.set_sign(2, 3, 1);
  g.set_sign(3, 1, -1);
  CHECK(circuit_sign(g, Circuit({1, 2, 3})) == -1);
  CHECK(circuit_sign(g, Circuit({1, 3, 2})) == std::nullopt);  // edges missing
  CHECK(circuit_sign(g, Circuit({1})) == std::nullopt);
  g.set_sign(1, 1, -1);
  CHECK(circuit_sign(g, Circuit({1})) == -1);
}

TEST_CASE("circuit sign parity law") {
  // In a local graph, a circuit's sign is +1 exactly when the number of its
  // vertices that are unstable at x is even. Checked against the direct
  // edge-product computation.
  std::mt19937 rng(31);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Circuit> circuits = enumerate_circuits(n);
    for (int t = 0; t < (n == 2 ? 256 : 400); ++t) {
      BooleanMap f = (n == 2) ? BooleanMap(2, {Word(t & 3), Word((t >> 2) & 3),
                                               Word((t >> 4) & 3),
                                               Word((t >> 6) & 3)})
                              : random_map(rng, n);
      for (Word w = 0; w < f.state_count(); ++w) {
        State x(w, n);
        LocalGraph g = local_graph(f, x);
        for (const Circuit& c : circuits) {
          std::optional<int> sign = circuit_sign(g, c);
          if (!sign) continue;
          int unstable = 0;
          for (int i : c.nodes())
            if (f.component(i, x) != x.bit(i)) ++unstable;
          CHECK(*sign == (unstable % 2 == 0 ? 1 : -1));
        }
      }
    }
  }
}

TEST_CASE("no negative circuit is local at a fixed point") {
  std::mt19937 rng(37);
  for (int t = 0; t < 300; ++t) {
    BooleanMap f = random_map(rng, 3);
    for (const State& x : fixed_points(f)) {
      LocalGraph g = local_graph(f, x);
      for (const Circuit& c : enumerate_circuits(3)) {
        std::optional<int> sign = circuit_sign(g, c);
        if (sign) CHECK(*sign == 1);
      }
    }
  }
}

TEST_CASE("local negative circuit detection on fixtures") {
  CHECK_FALSE(has_local_negative_circuit(chain2_map()));
  CHECK_FALSE(has_local_negative_circuit(long_path3_map()));
  CHECK_FALSE(has_local_negative_circuit(BooleanMap::identity(4)));
  CHECK(has_local_negative_circuit(BooleanMap::negation(2)));

  std::optional<NegativeCircuitWitness> w2 =
      find_local_negative_circuit(negcircuit2_map());
  REQUIRE(w2.has_value());
  CHECK(circuit_sign(local_graph(negcircuit2_map(), w2->state), w2->circuit) ==
        -1);

  // The three-variable fixture has local negative circuits, but none of
  // length 1 or 2.
  BooleanMap f = negcircuit3_map();
  std::optional<NegativeCircuitWitness> w3 = find_local_negative_circuit(f);
  REQUIRE(w3.has_value());
  CHECK(w3->circuit.length() == 3);
  for (Word w = 0; w < 8; ++w) {
    LocalGraph g = local_graph(f, State(w, 3));
    for (const Circuit& c : enumerate_circuits(3)) {
      if (c.length() >= 3) continue;
      std::optional<int> sign = circuit_sign(g, c);
      if (sign) CHECK(*sign == 1);
    }
  }
}

TEST_CASE("witness is the first in scan order") {
  BooleanMap f = negcircuit2_map();
  std::optional<NegativeCircuitWitness> w = find_local_negative_circuit(f);
  REQUIRE(w.has_value());
  bool earlier = false;
  for (Word v = 0; v < w->state.word() && !earlier; ++v)
    for (const Circuit& c : enumerate_circuits(2))
      if (circuit_sign(local_graph(f, State(v, 2)), c) == -1) earlier = true;
  CHECK_FALSE(earlier);
}
