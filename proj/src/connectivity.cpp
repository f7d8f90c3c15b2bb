#include "overlap/connectivity.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>

namespace overlap {

std::vector<std::vector<VertexId>> merge_components(std::span<const Edge> edges) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<VertexId>> sets;

  for (const Edge& e : edges) {
    // Locate both endpoints by scanning every group; this is the quadratic
    // part of the scan.
    std::size_t idx1 = kNone;
    std::size_t idx2 = kNone;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (const VertexId x : sets[i]) {
        if (x == e.from) idx1 = i;
        if (x == e.to) idx2 = i;
      }
    }

    if (idx1 == kNone && idx2 == kNone) {
      if (e.from == e.to) {
        sets.push_back({e.from});
      } else {
        sets.push_back({e.from, e.to});
      }
    } else if (idx1 == kNone) {
      sets[idx2].push_back(e.from);
    } else if (idx2 == kNone) {
      sets[idx1].push_back(e.to);
    } else if (idx1 != idx2) {
      const std::size_t lo = std::min(idx1, idx2);
      const std::size_t hi = std::max(idx1, idx2);
      std::vector<VertexId> merged = std::move(sets[lo]);
      merged.insert(merged.end(), sets[hi].begin(), sets[hi].end());
      sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(hi));
      sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(lo));
      sets.push_back(std::move(merged));
    }
  }

  for (auto& group : sets) std::sort(group.begin(), group.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool connected_paper(std::span<const Edge> edges) {
  return merge_components(edges).size() == 1;
}

bool connected_fast(std::span<const Edge> edges) {
  if (edges.empty()) return false;

  std::unordered_map<VertexId, std::uint32_t> dense;
  dense.reserve(edges.size() * 2);
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;
  const auto id_of = [&](VertexId v) {
    const auto [it, inserted] = dense.try_emplace(v, parent.size());
    if (inserted) {
      parent.push_back(it->second);
      size.push_back(1);
    }
    return it->second;
  };
  const auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  };

  std::size_t groups = 0;
  for (const Edge& e : edges) {
    const auto before = parent.size();
    std::uint32_t a = id_of(e.from);
    std::uint32_t b = id_of(e.to);
    groups += parent.size() - before;  // new vertices start as singletons
    a = find(a);
    b = find(b);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --groups;
  }
  return groups == 1;
}

}  // namespace overlap
