#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

#include "overlap/instance.hpp"

namespace overlap {

/// Refusal to run a superpolynomial scan past its configured size cap.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cap defaults keep worst-case runs in the seconds range.
inline constexpr std::size_t kPermutationCap = 10;
inline constexpr std::size_t kBacktrackCap = 14;

/// Exhaustive scan over all n! permutations in lexicographic order,
/// stopping at the first one whose consecutive components overlap.
/// Throws cap_error when n exceeds the cap.
bool oracle_permutations(const Instance& u, std::size_t cap = kPermutationCap);

/// Same verdict as oracle_permutations; the scan is split into
/// first-index blocks that OpenMP threads process independently.
bool oracle_permutations_parallel(const Instance& u, std::size_t cap = kPermutationCap);

/// Called with the current partial index sequence (0-based) each time the
/// backtracking search appends a component.
using ExpandHook = std::function<void(std::span<const std::size_t>)>;

/// Recursive extension search: seeds every component at depth 0, then
/// appends only overlap-compatible unused components, succeeding at depth
/// n. Throws cap_error when n exceeds the cap.
bool oracle_backtrack(const Instance& u, std::size_t cap = kBacktrackCap,
                      const ExpandHook& on_expand = {});

}  // namespace overlap
