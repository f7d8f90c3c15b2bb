#include "overlap/certificate.hpp"

#include <algorithm>
#include <deque>
#include <list>
#include <map>
#include <stdexcept>

#include "overlap/connectivity.hpp"
#include "overlap/decision.hpp"
#include "overlap/grams.hpp"
#include "overlap/pseudodigraph.hpp"

namespace overlap {

namespace {

// Remaining out-multiplicity per vertex. Entries are sorted by target, so
// consuming in entry order always takes the lexicographically smallest
// available gram; `next` skips exhausted entries and only moves forward.
struct Adjacency {
  struct OutList {
    std::vector<std::pair<VertexId, std::uint32_t>> entries;
    std::size_t next = 0;
  };
  std::vector<OutList> out;

  explicit Adjacency(const Pseudodigraph& g) : out(g.vertex_count()) {
    for (const auto& [e, f] : g.edges()) {
      out[e.from].entries.emplace_back(e.to, f);  // edges() is sorted
    }
  }

  bool has_out(VertexId v) {
    auto& list = out[v];
    while (list.next < list.entries.size() && list.entries[list.next].second == 0) {
      ++list.next;
    }
    return list.next < list.entries.size();
  }

  VertexId take_smallest(VertexId v) {
    auto& list = out[v];
    --list.entries[list.next].second;
    return list.entries[list.next].first;
  }

  void add_unit(Edge e) {
    auto& entries = out[e.from].entries;
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), e.to,
        [](const auto& entry, VertexId key) { return entry.first < key; });
    if (it != entries.end() && it->first == e.to) {
      ++it->second;
    } else {
      entries.insert(it, {e.to, 1});
    }
  }
};

// Greedy walk from `v` until no unused out-edge remains; appends to `seg`.
void walk(Adjacency& adj, VertexId v, std::list<Edge>& seg) {
  while (adj.has_out(v)) {
    const VertexId to = adj.take_smallest(v);
    seg.push_back({v, to});
    v = to;
  }
}

// Eulerian traversal consuming all `total` units: an initial walk from
// `start`, then residual cycles spliced in front of the first position
// whose tail vertex still has unused out-multiplicity.
std::vector<Edge> euler_edges(Adjacency& adj, VertexId start, std::uint64_t total) {
  std::list<Edge> path;
  walk(adj, start, path);
  for (auto it = path.begin(); it != path.end();) {
    if (adj.has_out(it->from)) {
      std::list<Edge> cycle;
      walk(adj, it->from, cycle);
      const auto head = cycle.begin();
      path.splice(it, cycle);
      it = head;  // re-scan from the start of the spliced cycle
    } else {
      ++it;
    }
  }
  if (path.size() != total) {
    throw std::logic_error("eulerian traversal failed to consume every edge unit");
  }
  return {path.begin(), path.end()};
}

}  // namespace

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ok: return "ok";
    case VerifyStatus::bad_permutation: return "bad_permutation";
    case VerifyStatus::overlap_break: return "overlap_break";
    case VerifyStatus::multiplicity_mismatch: return "multiplicity_mismatch";
  }
  return "ok";
}

std::optional<Certificate> extract_certificate(const Instance& u,
                                               const ExtractOptions& opts) {
  const Pseudodigraph g = build_pseudodigraph(u);
  const auto edge_set = g.edge_set();
  const bool connected =
      opts.fidelity ? connected_paper(edge_set) : connected_fast(edge_set);
  if (!connected) return std::nullopt;
  const ConditionReport cond = test_conditions(g);
  if (!cond.ok) return std::nullopt;

  Adjacency adj(g);
  std::vector<Edge> edges;
  if (cond.kind == BalanceCase::one_excess_pair && opts.fidelity) {
    // Append the missing back edge, close the graph into the balanced
    // case, then rotate the closed path at that edge and drop it.
    const Edge back{cond.sink, cond.source};
    adj.add_unit(back);
    const auto closed = euler_edges(adj, 0, g.total_multiplicity() + 1);
    const auto at = std::find(closed.begin(), closed.end(), back);
    edges.reserve(closed.size() - 1);
    edges.insert(edges.end(), at + 1, closed.end());
    edges.insert(edges.end(), closed.begin(), at);
  } else {
    const VertexId start =
        cond.kind == BalanceCase::one_excess_pair ? cond.source : 0;
    edges = euler_edges(adj, start, g.total_multiplicity());
  }

  // Assign component indices per edge occurrence, lowest unused first.
  std::map<Edge, std::deque<std::size_t>> pool;
  for (std::size_t i = 0; i < u.n(); ++i) {
    const Edge e{*g.vertex(u.prefix_gram_text(i)), *g.vertex(u.suffix_gram_text(i))};
    pool[e].push_back(i + 1);
  }
  Certificate cert;
  cert.permutation.reserve(edges.size());
  cert.path.reserve(edges.size());
  for (const Edge& e : edges) {
    auto& queue = pool[e];
    if (queue.empty()) throw std::logic_error("edge path does not match instance");
    cert.permutation.push_back(queue.front());
    queue.pop_front();
    cert.path.emplace_back(g.label(e.from), g.label(e.to));
  }
  return cert;
}

VerifyResult verify_certificate(const Instance& u, const Certificate& c) {
  const std::size_t n = u.n();
  VerifyResult result;

  if (c.permutation.size() != n) {
    result.status = VerifyStatus::bad_permutation;
    result.message = "permutation has " + std::to_string(c.permutation.size()) +
                     " indices, expected " + std::to_string(n);
    return result;
  }
  std::vector<bool> seen(n, false);
  for (const std::size_t j : c.permutation) {
    if (j < 1 || j > n) {
      result.status = VerifyStatus::bad_permutation;
      result.message = "index " + std::to_string(j) + " out of range 1.." + std::to_string(n);
      return result;
    }
    if (seen[j - 1]) {
      result.status = VerifyStatus::bad_permutation;
      result.message = "duplicate index " + std::to_string(j);
      return result;
    }
    seen[j - 1] = true;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto lhs = u.suffix_gram(c.permutation[i] - 1);
    const auto rhs = u.prefix_gram(c.permutation[i + 1] - 1);
    if (!std::equal(lhs.begin(), lhs.end(), rhs.begin(), rhs.end())) {
      result.status = VerifyStatus::overlap_break;
      result.position = i + 1;
      result.message = "overlap break at position " + std::to_string(i + 1) + ": \"" +
                       join_symbols(lhs, u.mode() == SymbolMode::tokens) + "\" vs \"" +
                       join_symbols(rhs, u.mode() == SymbolMode::tokens) + "\"";
      return result;
    }
  }

  // An absent path stands for the induced one, which tallies by definition.
  if (!c.path.empty()) {
    std::map<std::pair<std::string, std::string>, std::int64_t> tally;
    for (std::size_t i = 0; i < n; ++i) {
      ++tally[{u.prefix_gram_text(i), u.suffix_gram_text(i)}];
    }
    for (const auto& e : c.path) --tally[e];
    for (const auto& [e, count] : tally) {
      if (count != 0) {
        result.status = VerifyStatus::multiplicity_mismatch;
        result.edge = e;
        result.message = "multiplicity mismatch at edge (" + e.first + ", " + e.second +
                         "): off by " + std::to_string(-count);
        return result;
      }
    }
  }
  return result;
}

Certificate certificate_from_permutation(const Instance& u,
                                         std::vector<std::size_t> permutation_1based) {
  Certificate cert;
  cert.path.reserve(permutation_1based.size());
  for (const std::size_t j : permutation_1based) {
    if (j < 1 || j > u.n()) {
      throw std::out_of_range("permutation index " + std::to_string(j) + " out of range");
    }
    cert.path.emplace_back(u.prefix_gram_text(j - 1), u.suffix_gram_text(j - 1));
  }
  cert.permutation = std::move(permutation_1based);
  return cert;
}

std::optional<Certificate> certificate_from_path(
    const Instance& u, std::vector<std::pair<std::string, std::string>> path) {
  std::map<std::pair<std::string, std::string>, std::deque<std::size_t>> pool;
  for (std::size_t i = 0; i < u.n(); ++i) {
    pool[{u.prefix_gram_text(i), u.suffix_gram_text(i)}].push_back(i + 1);
  }
  Certificate cert;
  cert.permutation.reserve(path.size());
  for (const auto& e : path) {
    auto& queue = pool[e];
    if (queue.empty()) return std::nullopt;
    cert.permutation.push_back(queue.front());
    queue.pop_front();
  }
  cert.path = std::move(path);
  return cert;
}

std::string render_chain(const Instance& u, const Certificate& c) {
  std::string out;
  for (std::size_t i = 0; i < c.permutation.size(); ++i) {
    if (i > 0) out += " -> ";
    out += u.component_text(c.permutation[i] - 1);
  }
  return out;
}

}  // namespace overlap
