#include "linesym/corpus.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "linesym/constructions.hpp"
#include "linesym/graph6.hpp"
#include "linesym/metrics.hpp"
#include "linesym/symmetry.hpp"
#include "linesym/verifier.hpp"

namespace linesym {

namespace {

struct CheckName {
  Check check;
  std::string_view id;
  std::string_view alias;
};

constexpr std::array<CheckName, 7> kChecks{{
    {Check::line_equivalence, "line-equivalence", "thm13"},
    {Check::line_diameter, "line-diameter", "lemma22"},
    {Check::line_map, "line-map", "thm32"},
    {Check::line_automorphisms, "line-automorphisms", "lemma21"},
    {Check::valency4_girth3, "valency4-girth3", "classify-v4g3"},
    {Check::locally_cyclic, "locally-cyclic", "locally-cyclic"},
    {Check::weiss_dichotomy, "weiss-dichotomy", "weiss"},
}};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return in;
}

}  // namespace

std::string_view claim_id(Check c) noexcept {
  for (const auto& k : kChecks)
    if (k.check == c) return k.id;
  return "unknown";
}

Check parse_check(std::string_view name) {
  for (const auto& k : kChecks)
    if (name == k.id || name == k.alias) return k.check;
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& k : kChecks) out.push_back(k.check);
  return out;
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  std::vector<Edge> edges;
  std::optional<int> declared;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> nums;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0 || v > 1'000'000)
        throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                    ": bad vertex id '" + tok + "'");
      nums.push_back(v);
    }
    if (nums.empty()) continue;
    if (nums.size() == 1 && edges.empty() && !declared) {
      declared = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2)
      throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                  ": expected two vertex ids");
    edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    max_id = std::max({max_id, edges.back().first, edges.back().second});
  }
  int n = declared.value_or(max_id + 1);
  return Graph::build(n, edges, path.stem().string());
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in = open(path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string name = path.stem().string();
    out.push_back(parse_graph6(line).renamed(name + "#" + std::to_string(out.size())));
  }
  return out;
}

void Corpus::add(std::string name, Graph g) { entries_.push_back({name, g.renamed(name)}); }

void Corpus::add_catalog(std::string_view name) {
  try {
    add(std::string(name), catalog(name));
  } catch (const std::exception& e) {
    errors_.push_back({std::string(name), e.what()});
  }
}

void Corpus::add_edge_list(const std::filesystem::path& path) {
  try {
    Graph g = read_edge_list(path);
    add(g.name(), g);
  } catch (const std::exception& e) {
    errors_.push_back({path.string(), e.what()});
  }
}

void Corpus::add_graph6_file(const std::filesystem::path& path) {
  try {
    for (Graph& g : read_graph6_file(path)) add(g.name(), g);
  } catch (const std::exception& e) {
    errors_.push_back({path.string(), e.what()});
  }
}

std::vector<std::string> default_corpus_names() {
  return {"petersen",
          "heawood",
          "tutte_8_cage",
          "k33",
          "complete(4)",
          "cube",
          "icosahedron",
          "complete_multipartite(3,2)",
          "cycle(5)",
          "cycle(6)",
          "cycle(7)",
          "path(5)",
          "line(complete(4))",
          "line(k33)",
          "line(petersen)",
          "line(heawood)",
          "line(tutte_8_cage)",
          "triangular_torus(7,7)"};
}

Corpus default_corpus() {
  Corpus c;
  for (const auto& name : default_corpus_names()) c.add_catalog(name);
  return c;
}

namespace {

std::vector<VerdictReport> expand_line_checks(const Graph& g, Check check) {
  auto single = [&](int s) {
    return check == Check::line_equivalence ? check_line_equivalence(g, s)
                                            : check_weiss_flag(g, s);
  };
  if (line_theorem_hypotheses(g)) return {single(2)};
  int top = diameter(line_graph(g).graph).value() + 1;
  std::vector<VerdictReport> out;
  if (check == Check::line_equivalence) {
    AutGroup aut = automorphisms(g);
    for (int s = 2; s <= top; ++s) out.push_back(check_line_equivalence(g, s, aut));
  } else {
    for (int s = 2; s <= top; ++s) out.push_back(check_weiss_flag(g, s));
  }
  return out;
}

std::vector<VerdictReport> dispatch(const Graph& g, Check check) {
  switch (check) {
    case Check::line_equivalence:
    case Check::weiss_dichotomy:
      return expand_line_checks(g, check);
    case Check::line_diameter:
      return {check_diameter_lemma(g)};
    case Check::line_map: {
      std::vector<VerdictReport> out;
      bool usable = is_connected(g) && g.size() > 0;
      std::optional<AutGroup> aut;
      for (int s = 2; s <= 4; ++s) {
        if (usable && count_arcs(g, s) > 0) {
          if (!aut) aut = automorphisms(g);
          out.push_back(check_lmap_theorem(g, s, *aut));
        }
      }
      if (out.empty()) out.push_back(check_lmap_theorem(g, 2));
      return out;
    }
    case Check::line_automorphisms:
      return {check_line_automorphisms(g)};
    case Check::valency4_girth3:
      return {classify_valency4_girth3(g)};
    case Check::locally_cyclic:
      return {check_locally_cyclic(g)};
  }
  throw std::logic_error("unhandled check");
}

int s_of(const VerdictReport& r) {
  auto it = r.parameters.find("s");
  return it == r.parameters.end() ? -1 : it->get<int>();
}

}  // namespace

std::vector<VerdictReport> run_check(const Graph& g, Check check, bool timings) {
  auto start = std::chrono::steady_clock::now();
  std::vector<VerdictReport> out = dispatch(g, check);
  if (timings && !out.empty()) {
    std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
    for (auto& r : out) r.elapsed_ms = spent.count() / static_cast<double>(out.size());
  }
  return out;
}

RunResult run_corpus(const Corpus& corpus, const RunOptions& options) {
  RunResult result;
  for (const auto& err : corpus.errors()) {
    VerdictReport r;
    r.claim = "ingest";
    r.graph = err.source;
    r.lhs = "unreadable";
    r.rhs = "valid graph";
    settle(r, false, nlohmann::ordered_json{{"error", err.message}});
    result.reports.push_back(std::move(r));
  }
  for (const auto& entry : corpus.entries())
    for (Check c : options.checks) {
      auto reports = run_check(entry.graph, c, options.timings);
      std::move(reports.begin(), reports.end(), std::back_inserter(result.reports));
    }
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const VerdictReport& a, const VerdictReport& b) {
                     return std::tuple(a.graph, a.claim, s_of(a)) <
                            std::tuple(b.graph, b.claim, s_of(b));
                   });
  for (const auto& r : result.reports) {
    switch (r.verdict) {
      case Verdict::pass:
        ++result.passed;
        break;
      case Verdict::fail:
        ++result.failed;
        break;
      case Verdict::not_applicable:
        ++result.not_applicable;
        break;
    }
  }
  return result;
}

}  // namespace linesym
