#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "overlap/instance.hpp"
#include "overlap/pseudodigraph.hpp"

namespace overlap {

enum class BalanceCase { balanced, one_excess_pair, not_applicable };
enum class FailureReason { none, not_connected, degree_condition_violated };

/// Degree-condition outcome. Passing means either every vertex is balanced,
/// or exactly two are off balance by +1 and -1 (source and sink of a
/// would-be Eulerian path). `odd` lists every unbalanced vertex with its
/// out-minus-in difference, ascending by vertex.
struct ConditionReport {
  bool ok = false;
  BalanceCase kind = BalanceCase::not_applicable;
  std::vector<std::pair<VertexId, std::int64_t>> odd;
  VertexId source = 0;  // meaningful only when kind == one_excess_pair
  VertexId sink = 0;
};

ConditionReport test_conditions(const Pseudodigraph& g);

struct DecideOptions {
  bool fidelity = false;  // use the set-merging connectivity scan
};

struct Verdict {
  bool yes = false;
  FailureReason reason = FailureReason::none;
  BalanceCase kind = BalanceCase::not_applicable;
  // (gram label, out-weight minus in-weight) for every unbalanced vertex.
  std::vector<std::pair<std::string, std::int64_t>> odd_vertices;
};

/// YES iff the instance's graph is connected and the degree condition
/// holds. Diagnostics are populated on both outcomes; connectivity failure
/// takes precedence as the reported reason.
Verdict decide(const Instance& u, const DecideOptions& opts = {});
Verdict decide(const Pseudodigraph& g, const DecideOptions& opts = {});

std::string_view to_string(BalanceCase c);
std::string_view to_string(FailureReason r);

}  // namespace overlap
