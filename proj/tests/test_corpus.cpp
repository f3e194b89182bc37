#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "linesym/constructions.hpp"
#include "linesym/corpus.hpp"

using namespace linesym;

namespace {

const std::filesystem::path data_dir = LINESYM_TEST_DATA;

std::filesystem::path scratch(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("linesym_test_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("check names") {
  CHECK(parse_check("thm13") == Check::line_equivalence);
  CHECK(parse_check("lemma22") == Check::line_diameter);
  CHECK(parse_check("thm32") == Check::line_map);
  CHECK(parse_check("classify-v4g3") == Check::valency4_girth3);
  CHECK(parse_check("weiss") == Check::weiss_dichotomy);
  CHECK(parse_check("line-automorphisms") == Check::line_automorphisms);
  CHECK(claim_id(Check::locally_cyclic) == "locally-cyclic");
  CHECK_THROWS_AS(parse_check("thm99"), std::invalid_argument);
  CHECK(all_checks().size() == 7);
}

TEST_CASE("edge lists") {
  Graph p = read_edge_list(data_dir / "petersen.edges");
  CHECK(isomorphic(p, petersen_graph()));
  CHECK(p.name() == "petersen");
  CHECK(read_edge_list(data_dir / "c6.edges") == cycle_graph(6));
  CHECK(read_edge_list(scratch("iso.edges", "5\n0 1\n")).order() == 5);
  CHECK_THROWS_AS(read_edge_list(scratch("bad.edges", "0 1\n1 x\n")), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list(scratch("loop.edges", "0 0\n")), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list(scratch("three.edges", "0 1 2\n")), std::invalid_argument);
  CHECK_THROWS_AS(read_edge_list(data_dir / "missing.edges"), std::runtime_error);
}

TEST_CASE("graph6 files") {
  auto gs = read_graph6_file(scratch("two.g6", "C~\r\n\nI?LRCecq?\n"));
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == complete_graph(4));
  CHECK(gs[1] == petersen_graph());
  CHECK(gs[1].name() == "linesym_test_two#1");
}

TEST_CASE("empty corpus") {
  Corpus c;
  CHECK(c.empty());
  RunResult r = run_corpus(c);
  CHECK(r.reports.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("corrupted fixture fails the run once") {
  Corpus c;
  c.add_catalog("petersen");
  c.add_graph6_file(data_dir / "corrupt.g6");
  REQUIRE(c.errors().size() == 1);
  RunResult r = run_corpus(c);
  CHECK(r.failed == 1);
  CHECK(r.exit_code() != 0);
  auto bad = std::find_if(r.reports.begin(), r.reports.end(),
                          [](const VerdictReport& x) { return x.claim == "ingest"; });
  REQUIRE(bad != r.reports.end());
  CHECK(bad->witness);
}

TEST_CASE("unknown catalog name is an ingest error") {
  Corpus c;
  c.add_catalog("dodecahedron");
  CHECK(c.entries().empty());
  CHECK(run_corpus(c).failed == 1);
}

TEST_CASE("default corpus passes and is ordered") {
  RunResult r = run_corpus(default_corpus());
  CHECK(r.failed == 0);
  CHECK(r.passed > 100);
  CHECK(r.exit_code() == 0);
  for (std::size_t i = 1; i < r.reports.size(); ++i) {
    const auto& a = r.reports[i - 1];
    const auto& b = r.reports[i];
    CHECK(std::tie(a.graph, a.claim) <= std::tie(b.graph, b.claim));
  }
  RunResult again = run_corpus(default_corpus());
  REQUIRE(again.reports.size() == r.reports.size());
  for (std::size_t i = 0; i < r.reports.size(); ++i)
    CHECK(to_record(again.reports[i]) == to_record(r.reports[i]));
}

TEST_CASE("parametrised checks expand over s") {
  auto eq = run_check(petersen_graph(), Check::line_equivalence);
  CHECK(eq.size() == 3);
  auto lm = run_check(path_graph(3), Check::line_map);
  CHECK(lm.size() == 1);
  auto na = run_check(complete_graph(4), Check::weiss_dichotomy);
  REQUIRE(na.size() == 1);
  CHECK(na[0].verdict == Verdict::not_applicable);
  auto timed = run_check(petersen_graph(), Check::line_diameter, true);
  CHECK(timed[0].elapsed_ms);
}
