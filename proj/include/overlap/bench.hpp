#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "overlap/generator.hpp"
#include "overlap/oracle.hpp"

namespace overlap {

enum class BenchMethod {
  decide,
  oracle_perms,
  oracle_backtrack,
  connected_paper,
  connected_fast,
  build,
};

std::string_view to_string(BenchMethod m);
std::optional<BenchMethod> bench_method_from_string(std::string_view name);

struct BenchRecord {
  BenchMethod method;
  std::size_t n;
  std::size_t alphabet_size;
  std::size_t trial;
  std::uint64_t elapsed_ns;
  bool answer;
};

struct BenchPlan {
  std::vector<BenchMethod> methods;
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  GeneratorSpec base;  // n is overridden per size; seed feeds the lineage
  std::size_t permutation_cap = kPermutationCap;
  std::size_t backtrack_cap = kBacktrackCap;
  bool parallel_trials = false;
};

/// Runs every (method, size, trial) cell on freshly generated instances.
/// Per cell the timer wraps the decision call only; instance generation,
/// parsing and graph prep for the connectivity methods are untimed, and
/// one warm-up run per (method, size) is discarded. Trials of a cell share
/// the seed lineage, so every method sees the same instances. Cap
/// violations for the oracle methods are rejected before anything runs.
std::vector<BenchRecord> run_bench(const BenchPlan& plan);

/// CSV with the fixed header `method,n,alphabet_size,trial,elapsed_ns,answer`.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Median elapsed_ns over the records matching (method, n).
std::uint64_t median_elapsed(std::span<const BenchRecord> records, BenchMethod method,
                             std::size_t n);

}  // namespace overlap
