#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "overlap/instance.hpp"

namespace overlap {

/// splitmix64: Vigna's 64-bit mixing generator. Fixed constants, identical
/// output on every platform; see README for the constants.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound >= 1. Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);
};

/// Deterministic combination of a base seed with salts, for per-trial and
/// per-size seed lineages.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt1, std::uint64_t salt2);

enum class GenMode { uniform, planted_yes };

struct GeneratorSpec {
  std::size_t n = 2;
  std::size_t s = 2;
  std::size_t t = 1;
  std::size_t alphabet_size = 2;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::uniform;
};

/// First `size` symbols: single letters a..z, then tokens "t26", "t27", ...
std::vector<std::string> make_alphabet(std::size_t size);

/// Deterministic for a fixed spec. uniform draws every symbol
/// independently; planted_yes slices a random superstring into n
/// components that chain with t-symbol overlaps and shuffles them, so
/// decide is YES by construction. Throws parse_error on infeasible specs.
Instance generate(const GeneratorSpec& spec);

std::string_view to_string(GenMode m);
std::optional<GenMode> gen_mode_from_string(std::string_view name);

}  // namespace overlap
