#include <doctest.h>

#include <random>
#include <stdexcept>

#include "linesym/constructions.hpp"
#include "linesym/graph6.hpp"
#include "oracles.hpp"

using namespace linesym;

TEST_CASE("known encodings") {
  CHECK(emit_graph6(Graph::build(1, {})) == "@");
  CHECK(parse_graph6("@") == Graph::build(1, {}));
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  CHECK(emit_graph6(petersen_graph()) == oracle::graph6(petersen_graph()));
  CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
  Graph big = path_graph(70);
  std::string enc = emit_graph6(big);
  CHECK(enc.substr(0, 4) == "~?@E");
  CHECK(enc == oracle::graph6(big));
  CHECK(parse_graph6(enc) == big);
}

TEST_CASE("every labeled graph on at most five vertices") {
  int total = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> es;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) es.push_back(pairs[k]);
      Graph g = Graph::build(n, es);
      std::string enc = emit_graph6(g);
      CHECK(enc == oracle::graph6(g));
      CHECK(parse_graph6(enc) == g);
      ++total;
    }
  }
  CHECK(total == 1099);
}

TEST_CASE("random round trips") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = oracle::random_graph(rng, 1 + trial % 40, 0.3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);         // n = 0
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);         // body missing
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);       // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B@"), Graph6Error);        // padding bit set
  CHECK_THROWS_AS(parse_graph6("C~ "), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C\x7f"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("~??A"), Graph6Error);      // long header for small n
  CHECK_THROWS_AS(parse_graph6("C~\n\n"), Graph6Error);
  CHECK(parse_graph6("B?") == Graph::build(3, {}));
  CHECK(parse_graph6("Bg") == path_graph(3));
}
