// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "linesym/constructions.hpp"
#include "linesym/corpus.hpp"
#include "linesym/graph6.hpp"
#include "linesym/metrics.hpp"
#include "linesym/symmetry.hpp"
#include "linesym/verifier.hpp"
#include "linesym/walks.hpp"
#include "oracles.hpp"

using namespace linesym;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what;
      ok = false;
    }
  }
};

std::vector<Graph> corpus_graphs() {
  Corpus corpus = default_corpus();
  std::vector<Graph> out;
  for (const auto& e : corpus.entries()) out.push_back(e.graph);
  return out;
}

// Connected cubic graphs without 5-cycles that satisfy the line-equivalence hypotheses.
std::vector<Graph> cubic_fixtures(std::size_t count) {
  std::mt19937_64 rng(2024);
  std::vector<Graph> out;
  for (int attempt = 0; out.size() < count && attempt < 10000; ++attempt) {
    int n = 8 + 2 * static_cast<int>(out.size() % 4);
    Graph g = oracle::random_cubic(rng, n);
    if (oracle::has_cycle_of_length(g, 5) || line_theorem_hypotheses(g)) continue;
    out.push_back(g.renamed("cubic" + std::to_string(n) + "#" + std::to_string(out.size())));
  }
  return out;
}

void criterion1(Outcome& o) {
  std::vector<Graph> graphs{petersen_graph(), heawood_graph(), tutte_8_cage(), k33(), cube_graph()};
  auto cubics = cubic_fixtures(4);
  o.expect(cubics.size() == 4, "could not generate cubic fixtures");
  graphs.insert(graphs.end(), cubics.begin(), cubics.end());
  int cases = 0;
  for (const Graph& g : graphs) {
    AutGroup aut = automorphisms(g);
    int top = diameter(line_graph(g).graph).value() + 1;
    for (int s = 2; s <= top; ++s) {
      VerdictReport r = check_line_equivalence(g, s, aut);
      o.expect(r.verdict == Verdict::pass, g.name() + " s=" + std::to_string(s) + " " + to_record(r));
      ++cases;
    }
  }
  // K4 is complete, so the report is not-applicable; compare the two sides directly.
  Graph k4 = complete_graph(4);
  AutGroup aut = automorphisms(k4);
  for (int s = 2; s <= 3; ++s) {
    LineEquivalence eq = evaluate_line_equivalence(k4, s, aut);
    o.expect(eq.lhs() == eq.rhs(), "K4 s=" + std::to_string(s));
    o.expect(eq.lhs() == (s == 2), "K4 lhs s=" + std::to_string(s));
    ++cases;
  }
  o.note << cases << " (graph, s) cases";
}

void criterion2(Outcome& o) {
  struct Row {
    Graph g;
    int level;
  };
  for (auto& [g, level] : std::vector<Row>{{petersen_graph(), 3}, {heawood_graph(), 4}, {tutte_8_cage(), 5}}) {
    AutGroup aut = automorphisms(g);
    bool at = is_s_arc_transitive(g, level, aut);
    bool above = is_s_arc_transitive(g, level + 1, aut);
    o.expect(at && !above, g.name());
    o.note << g.name() << " " << level << "-arc transitive, not " << level + 1 << "; ";
  }
}

void criterion3(Outcome& o) {
  struct Row {
    Graph g;
    int diam;
  };
  for (auto& [g, diam] : std::vector<Row>{{line_graph(petersen_graph()).graph, 3},
                                          {line_graph(heawood_graph()).graph, 3},
                                          {line_graph(tutte_8_cage()).graph, 4}}) {
    AutGroup aut = automorphisms(g);
    o.expect(diameter(g) == diam, g.name() + " diameter");
    o.expect(is_s_geodesic_transitive(g, diam, aut), g.name() + " geodesic transitivity");
    o.note << g.name() << " " << diam << "-geodesic transitive; ";
  }
  Graph lk4 = line_graph(complete_graph(4)).graph;
  o.expect(isomorphic(lk4, complete_multipartite(3, 2)).has_value(), "L(K4) vs K3[2]");
  for (const Graph& g : {lk4, icosahedron()}) {
    o.expect(is_s_geodesic_transitive(g, 2, automorphisms(g)), g.name() + " 2-geodesic transitivity");
  }
  o.note << "L(K4) = K3[2] and icosahedron 2-geodesic transitive";
}

void criterion4(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(4);
  std::vector<Graph> graphs = corpus_graphs();
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<int> size(4, 10);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    graphs.push_back(oracle::random_connected(rng, size(rng), density(rng)));
  }
  int violations = 0;
  for (const Graph& g : graphs)
    if (check_diameter_lemma(g).verdict != Verdict::pass) ++violations;
  o.expect(violations == 0, std::to_string(violations) + " violations");
  for (int n = 2; n <= 4; ++n) {
    VerdictReport r = check_diameter_lemma(complete_graph(n));
    o.expect(r.lhs["x"] == n - 3, "K" + std::to_string(n) + " x");
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  o.expect(took.count() < 10.0, "over 10 s");
  o.note << graphs.size() << " graphs, " << violations << " violations, x(K2,K3,K4) = -1,0,1";
}

void criterion5(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(4, 12);
  std::uniform_real_distribution<double> density(0.0, 0.5);
  int checks = 0, skipped = 0, agree_girth = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_connected(rng, size(rng), density(rng));
    AutGroup aut = automorphisms(g);
    auto gth = oracle::girth(g);
    for (int s = 2; s <= 4; ++s) {
      VerdictReport r = check_lmap_theorem(g, s, aut);
      if (r.verdict == Verdict::not_applicable) {
        ++skipped;
        continue;
      }
      ++checks;
      o.expect(r.verdict == Verdict::pass, to_record(r));
      for (const char* key : {"injective", "image_in_arcs", "equivariant"})
        o.expect(r.lhs[key] == true, std::string(key) + " " + r.graph_id);
      if (r.lhs.contains("preserves_geodesics"))
        o.expect(r.lhs["preserves_geodesics"] == true, "geodesic image " + r.graph_id);
      if (r.lhs.contains("image_equals_geodesics")) {
        bool expected = !gth || *gth >= 2 * s - 2;
        o.expect(r.lhs["image_equals_geodesics"] == expected, "girth criterion " + r.graph_id);
        ++agree_girth;
      }
      o.expect(r.details["equivariance_pairs"].get<int>() >= 50, "equivariance sample size");
    }
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  o.expect(took.count() < 120.0, "over 120 s");
  o.note << checks << " (graph, s) checks, " << agree_girth << " girth-criterion comparisons, "
         << skipped << " without s-arcs";
}

void criterion6(Outcome& o) {
  int checked = 0;
  for (const Graph& g : corpus_graphs()) {
    if (g.order() < 5) continue;
    VerdictReport r = check_line_automorphisms(g);
    o.expect(r.verdict == Verdict::pass, g.name());
    ++checked;
  }
  struct Row {
    Graph g;
    std::uint64_t order;
  };
  for (auto& [g, order] : std::vector<Row>{{petersen_graph(), 120},
                                           {heawood_graph(), 336},
                                           {complete_graph(4), 24},
                                           {k33(), 72},
                                           {icosahedron(), 120},
                                           {tutte_8_cage(), 1440}}) {
    o.expect(automorphisms(g).order() == order, g.name() + " library order");
    o.expect(oracle::count_automorphisms(g) == order, g.name() + " backtracking order");
  }
  o.note << checked << " corpus graphs, named orders 120/336/24/72/120/1440 confirmed";
}

void criterion7(Outcome& o) {
  int checked = 0;
  for (const Graph& g : corpus_graphs()) {
    auto gth = girth(g);
    if (!gth || *gth < 4) continue;
    o.expect(isomorphic(clique_graph(g).graph, line_graph(g).graph).has_value(), g.name());
    ++checked;
  }
  Graph back = clique_graph(line_graph(petersen_graph()).graph).graph;
  o.expect(isomorphic(back, petersen_graph()).has_value(), "C(L(Petersen))");
  o.note << checked << " corpus graphs with girth >= 4, C(L(Petersen)) = Petersen";
}

void criterion8(Outcome& o) {
  int exhaustive = 0;
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
      o.expect(enc == oracle::graph6(g) && parse_graph6(enc) == g, enc);
      ++exhaustive;
    }
  }
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    Graph g = oracle::random_graph(rng, size(rng), density(rng));
    std::string enc = emit_graph6(g);
    o.expect(enc == oracle::graph6(g) && parse_graph6(enc) == g, enc);
  }
  o.note << exhaustive << " labeled graphs n <= 5, 10000 random n <= 12";
}

void criterion9(Outcome& o) {
  int applicable = 0, max_s = 0;
  for (const Graph& g : corpus_graphs()) {
    for (const VerdictReport& r : run_check(g, Check::weiss_dichotomy)) {
      o.expect(r.verdict != Verdict::fail, to_record(r));
      if (r.verdict != Verdict::pass) continue;
      int s = r.parameters["s"].get<int>();
      o.expect(s >= 2 && s <= kWeissArcBound, g.name() + " s=" + std::to_string(s));
      max_s = std::max(max_s, s);
      ++applicable;
    }
    bool valency3 = true;
    for (Vertex v = 0; v < g.order(); ++v) valency3 = valency3 && g.degree(v) >= 3;
    if (valency3 && is_connected(g))
      o.expect(!is_s_arc_transitive(g, 8, automorphisms(g)), g.name() + " 8-arc transitive");
  }
  o.note << applicable << " geodesic-transitive line-graph cases, largest s " << max_s
         << ", no 8-arc transitive graph";
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (auto& [id, run] : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " exception: " << e.what();
    }
    std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::printf("criterion %d: %s (%.2fs) %s\n", id, o.ok ? "PASS" : "FAIL", took.count(),
                o.note.str().c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
