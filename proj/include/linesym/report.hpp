#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "linesym/graph.hpp"

namespace linesym {

enum class Verdict { pass, fail, not_applicable };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of one claim checked on one graph.
///
/// `lhs` and `rhs` are the two sides the claim says must agree. A failing
/// report always carries a witness; the other verdicts never do.
struct VerdictReport {
  std::string claim;
  std::string graph;
  std::string graph_id;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  Verdict verdict = Verdict::not_applicable;
  std::string reason;
  std::optional<nlohmann::ordered_json> witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::optional<double> elapsed_ms;
};

/// Stable identifier: FNV-1a of the graph6 encoding, as 16 hex digits.
std::string graph_fingerprint(const Graph& g);

/// Report skeleton for `claim` on `g`.
VerdictReport make_report(std::string claim, const Graph& g);

/// Sets the verdict from lhs == rhs. `witness` is stored only on failure.
void settle(VerdictReport& report, bool agree, nlohmann::ordered_json witness);
void not_applicable(VerdictReport& report, std::string reason);

nlohmann::ordered_json to_json(const VerdictReport& report);
/// One compact JSON object, no trailing newline.
std::string to_record(const VerdictReport& report);
/// Human-readable summary table with a totals line.
std::string format_table(std::span<const VerdictReport> reports);

}  // namespace linesym
