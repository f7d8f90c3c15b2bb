#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace overlap {

/// Splits UTF-8 text into one entry per Unicode scalar. Throws
/// std::invalid_argument on malformed input (truncated or overlong
/// sequences, surrogates, out-of-range scalars).
std::vector<std::string> utf8_scalars(std::string_view text);

/// First k symbols of x, 1 <= k <= x.size(). Throws std::out_of_range.
std::span<const std::string> first_gram(std::span<const std::string> x, std::size_t k);

/// Last k symbols of x, 1 <= k <= x.size(). Throws std::out_of_range.
std::span<const std::string> last_gram(std::span<const std::string> x, std::size_t k);

// Convenience forms over UTF-8 text; symbols are Unicode scalars.
std::string first_gram(std::string_view x, std::size_t k);
std::string last_gram(std::string_view x, std::size_t k);

/// Renders a symbol sequence as text: plain concatenation, or
/// space-joined when `spaced` (token alphabets).
std::string join_symbols(std::span<const std::string> symbols, bool spaced);

}  // namespace overlap
