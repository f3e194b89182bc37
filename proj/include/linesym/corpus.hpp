#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linesym/graph.hpp"
#include "linesym/report.hpp"

namespace linesym {

enum class Check {
  line_equivalence,
  line_diameter,
  line_map,
  line_automorphisms,
  valency4_girth3,
  locally_cyclic,
  weiss_dichotomy,
};

/// Claim id used in reports ("line-equivalence", ...).
std::string_view claim_id(Check c) noexcept;
/// Accepts claim ids and the short CLI aliases (thm13, lemma21, lemma22, thm32,
/// classify-v4g3, locally-cyclic, weiss). Throws std::invalid_argument otherwise.
Check parse_check(std::string_view name);
std::vector<Check> all_checks();

/// Reads "u v" lines (0-based). Blank lines and '#' comments are skipped; a
/// lone integer before the first edge fixes the vertex count, otherwise it is
/// one more than the largest id. Throws std::runtime_error if unreadable and
/// std::invalid_argument on malformed content.
Graph read_edge_list(const std::filesystem::path& path);
/// One graph6 record per non-empty line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);

struct CorpusEntry {
  std::string name;
  Graph graph;
};

struct IngestError {
  std::string source;
  std::string message;
};

/// Named graphs gathered from the catalog and from files. Inputs that fail
/// validation are kept as errors rather than thrown, so a run can report them.
class Corpus {
 public:
  void add(std::string name, Graph g);
  void add_catalog(std::string_view name);
  void add_edge_list(const std::filesystem::path& path);
  void add_graph6_file(const std::filesystem::path& path);

  const std::vector<CorpusEntry>& entries() const noexcept { return entries_; }
  const std::vector<IngestError>& errors() const noexcept { return errors_; }
  bool empty() const noexcept { return entries_.empty() && errors_.empty(); }

 private:
  std::vector<CorpusEntry> entries_;
  std::vector<IngestError> errors_;
};

/// Catalog fixtures the acceptance suite runs over.
std::vector<std::string> default_corpus_names();
Corpus default_corpus();

struct RunOptions {
  std::vector<Check> checks = all_checks();
  bool timings = false;
};

struct RunResult {
  std::vector<VerdictReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t not_applicable = 0;

  int exit_code() const noexcept { return failed == 0 ? 0 : 1; }
};

/// Reports for one graph and one check. Parametrised checks expand over s:
/// line-equivalence and weiss-dichotomy over 2..diam(L(g)) + 1, line-map over
/// 2..4. Without an applicable s a single not-applicable report is produced.
std::vector<VerdictReport> run_check(const Graph& g, Check check, bool timings = false);

/// Every selected check on every entry, ordered by (graph, claim, s). An
/// ingest error becomes a failing "ingest" report.
RunResult run_corpus(const Corpus& corpus, const RunOptions& options = {});

}  // namespace linesym
