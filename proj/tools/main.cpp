// linesym: command-line front end for the graph-symmetry toolkit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linesym/constructions.hpp"
#include "linesym/corpus.hpp"
#include "linesym/graph6.hpp"
#include "linesym/metrics.hpp"
#include "linesym/symmetry.hpp"
#include "linesym/verifier.hpp"
#include "linesym/walks.hpp"

using namespace linesym;
using json = nlohmann::ordered_json;

namespace {

struct Input {
  std::string catalog;
  std::string graph6;
  std::string edges;
  std::vector<std::string> generators;

  void attach(CLI::App* cmd, bool with_generators) {
    auto* group = cmd->add_option_group("input");
    group->add_option("--catalog", catalog, "catalog name, e.g. petersen or line(k33)");
    group->add_option("--graph6", graph6, "file holding one graph6 record");
    group->add_option("--edges", edges, "edge-list file, one \"u v\" pair per line");
    group->require_option(1);
    if (with_generators)
      cmd->add_option("--generators", generators,
                      "group generators in one-line notation (default: full Aut)");
  }

  Graph load() const {
    if (!catalog.empty()) return catalog_graph();
    if (!graph6.empty()) {
      auto gs = read_graph6_file(graph6);
      if (gs.size() != 1)
        throw std::invalid_argument(graph6 + ": expected exactly one graph6 record");
      return gs.front();
    }
    return read_edge_list(edges);
  }

  Graph catalog_graph() const { return linesym::catalog(catalog).renamed(catalog); }

  std::optional<AutGroup> group(const Graph& g) const {
    if (generators.empty()) return std::nullopt;
    std::vector<Permutation> gens;
    for (const auto& text : generators) {
      gens.push_back(Permutation::parse(text));
      if (gens.back().degree() != g.order())
        throw std::invalid_argument("generator '" + text + "' has the wrong degree");
    }
    AutGroup grp = AutGroup::from_generators(g.order(), std::move(gens));
    require_subgroup_of_aut(g, grp);
    return grp;
  }
};

struct Output {
  std::string report;
  std::string format = "table";

  void attach(CLI::App* cmd) {
    cmd->add_option("--report", report, "write line-delimited records to FILE");
    cmd->add_option("--format", format, "stdout format")
        ->check(CLI::IsMember({"table", "records"}));
  }

  void emit(const std::vector<VerdictReport>& reports) const {
    if (format == "records") {
      for (const auto& r : reports) std::cout << to_record(r) << '\n';
    } else {
      std::cout << format_table(reports);
    }
    if (!report.empty()) {
      std::ofstream out(report);
      if (!out) throw std::runtime_error("cannot write " + report);
      for (const auto& r : reports) out << to_record(r) << '\n';
    }
  }
};

int exit_status(const std::vector<VerdictReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::fail) return 1;
  return 0;
}

json invariants(const Graph& g) {
  json j;
  j["name"] = g.name();
  j["graph6"] = emit_graph6(g);
  j["order"] = g.order();
  j["size"] = g.size();
  auto k = is_regular(g);
  j["valency"] = k ? json(*k) : json(nullptr);
  j["connected"] = is_connected(g);
  auto d = diameter(g);
  j["diameter"] = d ? json(*d) : json(nullptr);
  auto gth = girth(g);
  j["girth"] = gth ? json(*gth) : json(nullptr);
  auto local = local_type(g);
  j["local_type"] = local.summary ? json(local.summary->label()) : json("mixed");
  AutGroup aut = automorphisms(g);
  j["aut_order"] = aut.order();
  if (g.size() > 0) {
    auto ld = diameter(line_graph(g).graph);
    j["line_diameter"] = ld ? json(*ld) : json(nullptr);
  }
  if (d) {
    int arc_level = 0;
    if (k && *k >= 2)
      while (arc_level < 8 && is_s_arc_transitive(g, arc_level + 1, aut)) ++arc_level;
    j["arc_transitivity"] = arc_level;
    int geo_level = 0;
    while (geo_level < *d && is_s_geodesic_transitive(g, geo_level + 1, aut)) ++geo_level;
    j["geodesic_transitivity"] = geo_level;
    j["distance_transitive"] = is_distance_transitive(g, aut);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line graphs, walks and symmetry"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "named graphs");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog names")->callback([] {
    for (const auto& name : catalog_names()) std::cout << name << '\n';
  });

  Input input;
  Output output;

  auto* construct = app.add_subcommand("construct", "derived graph as graph6");
  input.attach(construct, false);
  std::string derived;
  auto* kinds = construct->add_option_group("kind");
  kinds->add_flag_callback("--line", [&] { derived = "line"; });
  kinds->add_flag_callback("--subdivision", [&] { derived = "subdivision"; });
  kinds->add_flag_callback("--clique", [&] { derived = "clique"; });
  kinds->require_option(1);
  bool as_edges = false;
  construct->add_flag("--as-edges", as_edges, "print an edge list instead of graph6");

  auto* inv = app.add_subcommand("invariants", "structural and symmetry invariants as JSON");
  input.attach(inv, false);

  auto* orbits = app.add_subcommand("orbits", "orbits of the group on s-arcs or s-geodesics");
  input.attach(orbits, true);
  int arcs_s = 0, geo_s = 0;
  auto* which = orbits->add_option_group("tuples");
  which->add_option("--arcs", arcs_s, "arc length")->check(CLI::PositiveNumber);
  which->add_option("--geodesics", geo_s, "geodesic length")->check(CLI::PositiveNumber);
  which->require_option(1);

  auto* verify = app.add_subcommand("verify", "check one claim on one graph");
  input.attach(verify, true);
  std::string check_name;
  verify->add_option("--check", check_name, "thm13|lemma21|lemma22|thm32|classify-v4g3|locally-cyclic|weiss")
      ->required();
  std::optional<int> verify_s;
  verify->add_option("--s", verify_s, "walk length; all applicable values when omitted");
  bool verify_timings = false;
  verify->add_flag("--timings", verify_timings, "record elapsed time per report");
  output.attach(verify);

  auto* corpus_cmd = app.add_subcommand("corpus", "batch verification");
  corpus_cmd->require_subcommand(1);
  auto* run = corpus_cmd->add_subcommand("run", "run checks over a corpus");
  bool use_default = false, run_timings = false;
  std::vector<std::string> run_catalog, run_graph6, run_edges, run_checks;
  run->add_flag("--all", use_default, "the default catalog corpus");
  run->add_option("--catalog", run_catalog, "catalog names");
  run->add_option("--graph6", run_graph6, "graph6 files, one record per line");
  run->add_option("--edges", run_edges, "edge-list files");
  run->add_option("--check", run_checks, "restrict to these checks");
  run->add_flag("--timings", run_timings, "record elapsed time per report");
  output.attach(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (construct->parsed()) {
      Graph g = input.load();
      Graph out = derived == "line"          ? line_graph(g).graph
                  : derived == "subdivision" ? subdivision_graph(g).graph
                                             : clique_graph(g).graph;
      if (as_edges) {
        std::cout << out.order() << '\n';
        for (auto [u, v] : out.edges()) std::cout << u << ' ' << v << '\n';
      } else {
        std::cout << emit_graph6(out) << '\n';
      }
    } else if (inv->parsed()) {
      std::cout << invariants(input.load()).dump(2) << '\n';
    } else if (orbits->parsed()) {
      Graph g = input.load();
      AutGroup grp = input.group(g).value_or(automorphisms(g));
      std::vector<Walk> walks = arcs_s ? enumerate_arcs(g, arcs_s) : enumerate_geodesics(g, geo_s);
      TransitivityResult t = transitive_on(walks, grp);
      json j;
      j["graph"] = g.name();
      j["tuples"] = arcs_s ? "arcs" : "geodesics";
      j["s"] = arcs_s ? arcs_s : geo_s;
      j["group_order"] = grp.order();
      j["count"] = walks.size();
      j["orbits"] = t.partition.orbit_count;
      j["orbit_sizes"] = t.partition.orbit_sizes;
      json reps = json::array();
      std::vector<char> seen(static_cast<std::size_t>(t.partition.orbit_count), 0);
      for (std::size_t i = 0; i < t.partition.universe.size(); ++i) {
        int id = t.partition.orbit_id[i];
        if (seen[id]) continue;
        seen[id] = 1;
        auto row = t.partition.universe[i];
        reps.push_back(std::vector<int>(row.begin(), row.end()));
      }
      j["representatives"] = reps;
      std::cout << j.dump(2) << '\n';
    } else if (verify->parsed()) {
      Graph g = input.load();
      Check check = parse_check(check_name);
      auto grp = input.group(g);
      if (grp && check != Check::line_equivalence && check != Check::line_map)
        throw std::invalid_argument("--generators applies to thm13 and thm32 only");
      std::vector<VerdictReport> reports;
      if (verify_s) {
        int s = *verify_s;
        switch (check) {
          case Check::line_equivalence:
            reports.push_back(grp ? check_line_equivalence(g, s, *grp) : check_line_equivalence(g, s));
            break;
          case Check::line_map:
            reports.push_back(grp ? check_lmap_theorem(g, s, *grp) : check_lmap_theorem(g, s));
            break;
          case Check::weiss_dichotomy:
            reports.push_back(check_weiss_flag(g, s));
            break;
          default:
            throw std::invalid_argument("--s does not apply to " + check_name);
        }
      } else if (grp) {
        throw std::invalid_argument("--generators needs --s");
      } else {
        reports = run_check(g, check, verify_timings);
      }
      output.emit(reports);
      return exit_status(reports);
    } else if (run->parsed()) {
      Corpus corpus = use_default ? default_corpus() : Corpus{};
      for (const auto& name : run_catalog) corpus.add_catalog(name);
      for (const auto& path : run_graph6) corpus.add_graph6_file(path);
      for (const auto& path : run_edges) corpus.add_edge_list(path);
      RunOptions options;
      options.timings = run_timings;
      if (!run_checks.empty()) {
        options.checks.clear();
        for (const auto& c : run_checks) options.checks.push_back(parse_check(c));
      }
      RunResult result = run_corpus(corpus, options);
      output.emit(result.reports);
      return result.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "linesym: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
