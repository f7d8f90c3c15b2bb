#include "overlap/decision.hpp"

#include "overlap/connectivity.hpp"

namespace overlap {

std::string_view to_string(BalanceCase c) {
  switch (c) {
    case BalanceCase::balanced: return "balanced";
    case BalanceCase::one_excess_pair: return "one_excess_pair";
    case BalanceCase::not_applicable: return "not_applicable";
  }
  return "not_applicable";
}

std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::not_connected: return "not_connected";
    case FailureReason::degree_condition_violated: return "degree_condition_violated";
  }
  return "none";
}

ConditionReport test_conditions(const Pseudodigraph& g) {
  const DegreeTable table = degree_table(g);
  ConditionReport report;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::int64_t d = table.diff(v);
    if (d != 0) report.odd.emplace_back(v, d);
  }

  if (report.odd.empty()) {
    report.ok = true;
    report.kind = BalanceCase::balanced;
    return report;
  }
  if (report.odd.size() == 2) {
    const auto& [v1, d1] = report.odd[0];
    const auto& [v2, d2] = report.odd[1];
    if (d1 == 1 && d2 == -1) {
      report.ok = true;
      report.kind = BalanceCase::one_excess_pair;
      report.source = v1;
      report.sink = v2;
      return report;
    }
    if (d1 == -1 && d2 == 1) {
      report.ok = true;
      report.kind = BalanceCase::one_excess_pair;
      report.source = v2;
      report.sink = v1;
      return report;
    }
  }
  return report;  // ok=false, not_applicable
}

Verdict decide(const Pseudodigraph& g, const DecideOptions& opts) {
  const auto edges = g.edge_set();
  const bool connected =
      opts.fidelity ? connected_paper(edges) : connected_fast(edges);
  const ConditionReport cond = test_conditions(g);

  Verdict verdict;
  verdict.odd_vertices.reserve(cond.odd.size());
  for (const auto& [v, d] : cond.odd) verdict.odd_vertices.emplace_back(g.label(v), d);
  verdict.kind = cond.kind;

  if (!connected) {
    verdict.yes = false;
    verdict.reason = FailureReason::not_connected;
  } else if (!cond.ok) {
    verdict.yes = false;
    verdict.reason = FailureReason::degree_condition_violated;
  } else {
    verdict.yes = true;
    verdict.reason = FailureReason::none;
  }
  return verdict;
}

Verdict decide(const Instance& u, const DecideOptions& opts) {
  return decide(build_pseudodigraph(u), opts);
}

}  // namespace overlap
