#include "overlap/pseudodigraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "overlap/grams.hpp"

namespace overlap {

namespace {

std::uint64_t edge_key(Edge e) {
  return (static_cast<std::uint64_t>(e.from) << 32) | e.to;
}

}  // namespace

Pseudodigraph::Pseudodigraph(std::vector<std::string> labels,
                             std::vector<std::pair<Edge, std::uint32_t>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::logic_error("pseudodigraph labels must be sorted and unique");
  }
  for (const auto& [e, f] : edges_) {
    if (e.from >= labels_.size() || e.to >= labels_.size()) {
      throw std::logic_error("pseudodigraph edge endpoint out of range");
    }
    if (f == 0) throw std::logic_error("pseudodigraph multiplicity must be positive");
    total_ += f;
  }
  const auto by_edge = [](const auto& a, const auto& b) { return a.first < b.first; };
  if (!std::is_sorted(edges_.begin(), edges_.end(), by_edge) ||
      std::adjacent_find(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
        return a.first == b.first;
      }) != edges_.end()) {
    throw std::logic_error("pseudodigraph edges must be sorted and unique");
  }
}

std::optional<VertexId> Pseudodigraph::vertex(std::string_view label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::uint32_t Pseudodigraph::multiplicity(Edge e) const {
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const auto& entry, Edge key) { return entry.first < key; });
  if (it == edges_.end() || it->first != e) return 0;
  return it->second;
}

std::vector<Edge> Pseudodigraph::edge_set() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [e, f] : edges_) out.push_back(e);
  return out;
}

Pseudodigraph build_pseudodigraph(const Instance& u) {
  const bool spaced = u.mode() == SymbolMode::tokens;

  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> labels;
  const auto intern = [&](std::string gram) -> VertexId {
    const auto [it, inserted] = index.try_emplace(std::move(gram), labels.size());
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::unordered_map<std::uint64_t, std::uint32_t> counts;
  counts.reserve(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) {
    const VertexId from = intern(join_symbols(u.prefix_gram(i), spaced));
    const VertexId to = intern(join_symbols(u.suffix_gram(i), spaced));
    ++counts[edge_key({from, to})];
  }

  // Canonical form: vertices sorted by gram, edges sorted by endpoints.
  std::vector<VertexId> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return labels[a] < labels[b]; });
  std::vector<VertexId> rank(labels.size());
  std::vector<std::string> sorted_labels(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<VertexId>(i);
    sorted_labels[i] = std::move(labels[order[i]]);
  }

  std::vector<std::pair<Edge, std::uint32_t>> edges;
  edges.reserve(counts.size());
  for (const auto& [key, f] : counts) {
    const Edge e{rank[static_cast<VertexId>(key >> 32)],
                 rank[static_cast<VertexId>(key & 0xFFFFFFFFu)]};
    edges.emplace_back(e, f);
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  return Pseudodigraph(std::move(sorted_labels), std::move(edges));
}

DegreeTable degree_table(const Pseudodigraph& g) {
  DegreeTable table;
  table.out_weight.assign(g.vertex_count(), 0);
  table.in_weight.assign(g.vertex_count(), 0);
  for (const auto& [e, f] : g.edges()) {
    table.out_weight[e.from] += f;
    table.in_weight[e.to] += f;
  }
  return table;
}

}  // namespace overlap
