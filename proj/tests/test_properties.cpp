// Randomised properties across modules.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "linesym/constructions.hpp"
#include "linesym/graph6.hpp"
#include "linesym/metrics.hpp"
#include "linesym/symmetry.hpp"
#include "linesym/verifier.hpp"
#include "linesym/walks.hpp"
#include "oracles.hpp"

using namespace linesym;

namespace {

Graph relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), es);
}

}  // namespace

TEST_CASE("invariants survive relabelling") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_connected(rng, 3 + trial % 9, 0.3);
    Graph h = relabel(g, rng);
    CHECK(automorphisms(g).order() == automorphisms(h).order());
    CHECK(girth(g) == girth(h));
    CHECK(diameter(g) == diameter(h));
    CHECK(count_arcs(g, 3) == count_arcs(h, 3));
    CHECK(isomorphic(line_graph(g).graph, line_graph(h).graph));
  }
}

TEST_CASE("line graph automorphisms match on connected graphs with five or more vertices") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = oracle::random_connected(rng, 5 + trial % 5, trial % 2 ? 0.5 : 0.15);
    VerdictReport r = check_line_automorphisms(g);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.lhs == oracle::count_automorphisms(g));
  }
}

TEST_CASE("diameter relations on random graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_connected(rng, 2 + trial % 10, 0.25);
    int d = oracle::diameter(g).value();
    int dl = oracle::diameter(oracle::line_graph(g)).value();
    int ds = diameter(subdivision_graph(g).graph).value();
    CHECK(dl - d >= -1);
    CHECK(dl - d <= 1);
    CHECK(ds - 2 * d >= 0);
    CHECK(ds - 2 * d <= 2);
    CHECK(check_diameter_lemma(g).verdict == Verdict::pass);
  }
}

TEST_CASE("line map properties against brute force") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected(rng, 4 + trial % 5, 0.3);
    LineGraph line = line_graph(g);
    auto line_dist = oracle::distances(line.graph);
    auto gth = oracle::girth(g);
    for (int s = 2; s <= 4; ++s) {
      auto arcs = enumerate_arcs(g, s);
      if (arcs.empty()) continue;
      std::vector<std::vector<int>> image;
      for (const auto& a : arcs) image.push_back(lmap(line.index, a).edges);
      std::sort(image.begin(), image.end());
      CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
      int line_diam = oracle::diameter(line.graph).value();
      if (s - 1 <= line_diam) {
        auto geos = oracle::geodesics(line.graph, s - 1);
        bool equal = image == geos;
        CHECK(equal == (!gth || *gth >= 2 * s - 2));
        CHECK(std::includes(image.begin(), image.end(), geos.begin(), geos.end()));
        for (const auto& t : geos) {
          Walk back = lmap_invert(line, LineTuple{t});
          CHECK(lmap(line.index, back).edges == t);
        }
      }
      VerdictReport r = check_lmap_theorem(g, s);
      CHECK(r.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("arc transitivity is monotone in s") {
  std::mt19937_64 rng(59);
  std::vector<Graph> graphs{petersen_graph(), heawood_graph(), k33(), cube_graph(), cycle_graph(6)};
  for (int i = 0; i < 20; ++i) graphs.push_back(oracle::random_connected(rng, 6, 0.5));
  for (const Graph& g : graphs) {
    AutGroup aut = automorphisms(g);
    bool previous = true;
    for (int s = 1; s <= 6; ++s) {
      bool now = is_s_arc_transitive(g, s, aut);
      if (now) CHECK(previous);
      previous = now;
    }
  }
}

TEST_CASE("line equivalence holds on random cubic graphs") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = oracle::random_cubic(rng, 8 + 2 * (trial % 4));
    if (line_theorem_hypotheses(g)) continue;
    AutGroup aut = automorphisms(g);
    int top = diameter(line_graph(g).graph).value() + 1;
    for (int s = 2; s <= top; ++s) CHECK(check_line_equivalence(g, s, aut).verdict == Verdict::pass);
  }
}

TEST_CASE("graph6 matches the reference encoder on random graphs") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::random_graph(rng, 1 + trial % 70, 0.2);
    CHECK(emit_graph6(g) == oracle::graph6(g));
  }
}
