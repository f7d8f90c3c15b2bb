#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overlap/instance.hpp"

namespace overlap {

using VertexId = std::uint32_t;

struct Edge {
  VertexId from;
  VertexId to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A directed multigraph with self-loops: vertex labels (the overlap
/// grams, sorted), distinct edges, and a positive multiplicity per edge.
class Pseudodigraph {
 public:
  /// `labels` must be sorted and unique; `edges` sorted by (from, to),
  /// unique, with endpoints in range and multiplicity >= 1.
  Pseudodigraph(std::vector<std::string> labels,
                std::vector<std::pair<Edge, std::uint32_t>> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> vertex(std::string_view label) const;

  /// Distinct edges with multiplicities, ascending by (from, to).
  const std::vector<std::pair<Edge, std::uint32_t>>& edges() const { return edges_; }
  std::uint32_t multiplicity(Edge e) const;
  std::uint64_t total_multiplicity() const { return total_; }

  /// Edge set without multiplicities, for connectivity checks.
  std::vector<Edge> edge_set() const;

  bool operator==(const Pseudodigraph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<Edge, std::uint32_t>> edges_;
  std::uint64_t total_ = 0;
};

/// Graph associated to an instance: one vertex per distinct prefix/suffix
/// t-gram, one unit of multiplicity on (prefix gram, suffix gram) per
/// component. Output is canonical: independent of component order.
Pseudodigraph build_pseudodigraph(const Instance& u);

/// Per-vertex outgoing / incoming multiplicity totals, indexed by VertexId.
/// A self-loop at v counts toward both.
struct DegreeTable {
  std::vector<std::uint64_t> out_weight;
  std::vector<std::uint64_t> in_weight;

  std::int64_t diff(VertexId v) const {
    return static_cast<std::int64_t>(out_weight[v]) -
           static_cast<std::int64_t>(in_weight[v]);
  }
};

DegreeTable degree_table(const Pseudodigraph& g);

}  // namespace overlap
