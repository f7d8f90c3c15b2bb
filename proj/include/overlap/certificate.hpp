#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "overlap/instance.hpp"

namespace overlap {

/// A YES witness: a permutation of {1..n} (1-based component indices) and
/// the edge path it induces, as (from gram, to gram) label pairs.
struct Certificate {
  std::vector<std::size_t> permutation;
  std::vector<std::pair<std::string, std::string>> path;

  bool operator==(const Certificate&) const = default;
};

struct ExtractOptions {
  /// Use the set-merging connectivity scan, and realize the one-excess-pair
  /// case by augmenting the graph with the missing back edge, extracting a
  /// closed path, and rotating it at that edge instead of starting the walk
  /// at the excess vertex.
  bool fidelity = false;
};

/// Returns a verified-constructible witness, or nullopt exactly when the
/// instance is a NO instance. The walk consumes remaining multiplicity
/// greedily, always toward the lexicographically smallest gram, and splices
/// residual cycles into the path until all n units are used. Component
/// indices are assigned per edge occurrence lowest-unused-first.
std::optional<Certificate> extract_certificate(const Instance& u,
                                               const ExtractOptions& opts = {});

enum class VerifyStatus { ok, bad_permutation, overlap_break, multiplicity_mismatch };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::ok;
  std::size_t position = 0;  // 1-based pair index, overlap_break only
  std::pair<std::string, std::string> edge;  // multiplicity_mismatch only
  std::string message;

  bool ok() const { return status == VerifyStatus::ok; }
};

/// Independent checker; never calls extract_certificate. Accepts iff the
/// permutation is a bijection on {1..n}, consecutive components overlap in
/// t symbols, and the path (when present) consumes exactly the instance's
/// edge multiset. An empty path is treated as the one the permutation
/// induces.
VerifyResult verify_certificate(const Instance& u, const Certificate& c);

/// Materializes the edge path induced by a permutation whose entries are
/// all in range (bijectivity is not required here; verify checks it).
/// Throws std::out_of_range otherwise.
Certificate certificate_from_permutation(const Instance& u,
                                         std::vector<std::size_t> permutation_1based);

/// Builds a certificate from a bare edge path by assigning each occurrence
/// the lowest unused component index with that (prefix, suffix) pair.
/// Returns nullopt when the path does not match the instance's edges.
std::optional<Certificate> certificate_from_path(
    const Instance& u, std::vector<std::pair<std::string, std::string>> path);

/// Components in permutation order, joined with arrows: "ab -> ba -> ...".
std::string render_chain(const Instance& u, const Certificate& c);

std::string_view to_string(VerifyStatus s);

}  // namespace overlap
