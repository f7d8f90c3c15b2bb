#pragma once

#include <span>
#include <vector>

#include "overlap/pseudodigraph.hpp"

namespace overlap {

/// The group partition left by the set-merging scan: one linear pass over
/// the edges, locating each endpoint's group by exhaustive search and
/// merging. Quadratic in the worst case. Groups and their members are
/// returned sorted.
std::vector<std::vector<VertexId>> merge_components(std::span<const Edge> edges);

/// Weak connectivity via the set-merging scan. An empty edge set is not
/// connected.
bool connected_paper(std::span<const Edge> edges);

/// Same verdict as connected_paper on every input; union-find with path
/// compression and union by size, near-linear.
bool connected_fast(std::span<const Edge> edges);

}  // namespace overlap
