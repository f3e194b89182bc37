#include "linesym/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "linesym/graph6.hpp"

namespace linesym {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      break;
  }
  return "not-applicable";
}

std::string graph_fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : emit_graph6(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

VerdictReport make_report(std::string claim, const Graph& g) {
  VerdictReport r;
  r.claim = std::move(claim);
  r.graph = g.name().empty() ? "unnamed" : g.name();
  r.graph_id = graph_fingerprint(g);
  return r;
}

void settle(VerdictReport& report, bool agree, nlohmann::ordered_json witness) {
  report.verdict = agree ? Verdict::pass : Verdict::fail;
  if (agree) {
    report.witness.reset();
  } else {
    report.witness = std::move(witness);
  }
}

void not_applicable(VerdictReport& report, std::string reason) {
  report.verdict = Verdict::not_applicable;
  report.reason = std::move(reason);
  report.witness.reset();
}

nlohmann::ordered_json to_json(const VerdictReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["graph"] = r.graph;
  j["graph_id"] = r.graph_id;
  j["parameters"] = r.parameters;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.details.empty()) j["details"] = r.details;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

std::string to_record(const VerdictReport& report) { return to_json(report).dump(); }

std::string format_table(std::span<const VerdictReport> reports) {
  std::size_t graph_w = 5, claim_w = 5, param_w = 6;
  std::vector<std::string> params;
  for (const auto& r : reports) {
    params.push_back(r.parameters.empty() ? "-" : r.parameters.dump());
    graph_w = std::max(graph_w, r.graph.size());
    claim_w = std::max(claim_w, r.claim.size());
    param_w = std::max(param_w, params.back().size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::ostringstream out;
  out << pad("graph", graph_w) << "  " << pad("claim", claim_w) << "  " << pad("params", param_w)
      << "  verdict\n";
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    ++counts[static_cast<int>(r.verdict)];
    out << pad(r.graph, graph_w) << "  " << pad(r.claim, claim_w) << "  "
        << pad(params[i], param_w) << "  " << to_string(r.verdict);
    if (!r.reason.empty()) out << " (" << r.reason << ")";
    out << '\n';
  }
  out << reports.size() << " checks: " << counts[0] << " pass, " << counts[1] << " fail, "
      << counts[2] << " not-applicable\n";
  return out.str();
}

}  // namespace linesym
