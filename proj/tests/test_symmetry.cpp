#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "linesym/constructions.hpp"
#include "linesym/metrics.hpp"
#include "linesym/symmetry.hpp"
#include "linesym/walks.hpp"
#include "oracles.hpp"

using namespace linesym;

namespace {

// Single orbit by applying every group element to one tuple.
bool brute_transitive(const std::vector<std::vector<int>>& tuples,
                      const std::vector<std::vector<int>>& group) {
  if (tuples.empty()) return true;
  std::set<std::vector<int>> orbit;
  for (const auto& p : group) {
    std::vector<int> t;
    for (int x : tuples.front()) t.push_back(p[x]);
    orbit.insert(t);
  }
  return orbit.size() == tuples.size();
}

}  // namespace

TEST_CASE("named arc transitivity levels") {
  struct Row {
    Graph g;
    int level;
  };
  for (auto& [g, level] : std::vector<Row>{{petersen_graph(), 3},
                                           {heawood_graph(), 4},
                                           {tutte_8_cage(), 5},
                                           {k33(), 3},
                                           {cube_graph(), 2},
                                           {complete_graph(4), 2},
                                           {icosahedron(), 1}}) {
    CAPTURE(g.name());
    AutGroup aut = automorphisms(g);
    CHECK(is_s_arc_transitive(g, level, aut));
    CHECK_FALSE(is_s_arc_transitive(g, level + 1, aut));
  }
}

TEST_CASE("transitivity agrees with explicit group elements") {
  std::mt19937_64 rng(31);
  int transitive_cases = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_connected(rng, 4 + trial % 5, trial % 2 ? 0.6 : 0.2);
    auto group = oracle::all_automorphisms(g);
    AutGroup aut = automorphisms(g);
    for (int s = 1; s <= 3; ++s) {
      bool expect = brute_transitive(oracle::arcs(g, s), group);
      CHECK(is_transitive_on_arcs(g, s, aut) == expect);
      transitive_cases += expect;
      if (s <= oracle::diameter(g).value())
        CHECK(is_transitive_on_geodesics(g, s, aut) ==
              brute_transitive(oracle::geodesics(g, s), group));
    }
  }
  CHECK(transitive_cases > 0);
}

TEST_CASE("orbit partition") {
  Graph p = path_graph(4);
  AutGroup aut = automorphisms(p);
  auto result = transitive_on(enumerate_arcs(p, 1), aut);
  CHECK_FALSE(result.transitive);
  CHECK(result.partition.orbit_count == 3);
  CHECK(result.partition.orbit_sizes == std::vector<std::size_t>{2, 2, 2});
  auto orbit = orbit_of(Walk{{0, 1}}, aut);
  CHECK(orbit == std::vector<Walk>{Walk{{0, 1}}, Walk{{3, 2}}});
  std::vector<Walk> not_invariant{Walk{{0, 1}}};
  CHECK_THROWS_AS(transitive_on(not_invariant, aut), std::invalid_argument);
}

TEST_CASE("tuple set lookup") {
  TupleSet ts({{2, 1}, {0, 1}, {1, 0}});
  CHECK(ts.size() == 3);
  CHECK(ts.width() == 2);
  std::vector<int> probe{1, 0};
  CHECK(ts.find(probe) == 1u);
  std::vector<int> missing{2, 2};
  CHECK_FALSE(ts.find(missing));
}

TEST_CASE("induced edge action") {
  Graph k4 = complete_graph(4);
  LineGraph line = line_graph(k4);
  AutGroup aut = automorphisms(k4);
  AutGroup edge_group = induced_edge_group(line.index, aut);
  CHECK(edge_group.order() == 24);
  for (const auto& p : edge_group.generators()) CHECK(is_automorphism(line.graph, p));
  Permutation swap01 = Permutation::parse("1 0 2 3");
  Permutation e = induced_edge_action(line.index, swap01);
  CHECK(e(line.index.rank(0, 2)) == line.index.rank(1, 2));
  CHECK(e(line.index.rank(0, 1)) == line.index.rank(0, 1));
  CHECK_THROWS_AS(induced_edge_action(line.index, Permutation::parse("1 0 2")),
                  std::invalid_argument);
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(induced_edge_action(EdgeIndex(c4), Permutation::parse("1 0 2 3")),
                  std::invalid_argument);
}

TEST_CASE("subgroups") {
  Graph c6 = cycle_graph(6);
  AutGroup rotations = AutGroup::from_generators(6, {Permutation::parse("1 2 3 4 5 0")});
  CHECK(rotations.order() == 6);
  CHECK_FALSE(is_transitive_on_arcs(c6, 1, rotations));
  CHECK(is_transitive_on_arcs(c6, 1, automorphisms(c6)));
  AutGroup bogus = AutGroup::from_generators(6, {Permutation::parse("1 0 2 3 4 5")});
  CHECK_THROWS_AS(require_subgroup_of_aut(c6, bogus), std::invalid_argument);
}

TEST_CASE("geodesic and distance transitivity") {
  struct Row {
    Graph g;
    int geodesic_level;
  };
  for (auto& [g, level] : std::vector<Row>{{line_graph(petersen_graph()).graph, 3},
                                           {line_graph(heawood_graph()).graph, 3},
                                           {line_graph(tutte_8_cage()).graph, 4},
                                           {line_graph(complete_graph(4)).graph, 2},
                                           {icosahedron(), 3}}) {
    CAPTURE(g.name());
    AutGroup aut = automorphisms(g);
    CHECK(diameter(g) == level);
    CHECK(is_s_geodesic_transitive(g, level, aut));
    CHECK(is_distance_transitive(g, aut));
  }
  Graph torus = triangular_torus(7, 7);
  AutGroup aut = automorphisms(torus);
  CHECK_FALSE(is_s_geodesic_transitive(torus, 2, aut));
  CHECK_THROWS_AS(is_s_geodesic_transitive(petersen_graph(), 3, automorphisms(petersen_graph())),
                  std::invalid_argument);
}

TEST_CASE("no corpus graph of valency three or more is 8-arc transitive") {
  for (Graph g : {petersen_graph(), heawood_graph(), tutte_8_cage(), k33(), cube_graph()}) {
    AutGroup aut = automorphisms(g);
    CHECK_FALSE(is_s_arc_transitive(g, 6, aut));
    CHECK_FALSE(is_s_arc_transitive(g, 8, aut));
  }
}
