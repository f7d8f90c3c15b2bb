#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace overlap {

/// How symbols are written in instance documents: one Unicode scalar per
/// symbol, or whitespace-separated tokens.
enum class SymbolMode { chars, tokens };

/// Malformed instance documents, invalid (s, t) combinations, infeasible
/// generator specs.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordered n-uple of equal-length symbol strings together with the
/// overlap width t. Immutable after construction; n >= 2, 1 <= t < s.
class Instance {
 public:
  /// Validates and takes ownership of the components. Each component is a
  /// sequence of symbol tokens; all must have the same length s with
  /// 1 <= t < s, and there must be at least two of them.
  static Instance from_components(std::vector<std::vector<std::string>> components,
                                  std::size_t t, SymbolMode mode = SymbolMode::chars);

  /// Chars-mode shorthand: each element is split into Unicode scalars.
  static Instance from_chars(const std::vector<std::string>& components, std::size_t t);

  std::size_t n() const { return components_.size(); }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  SymbolMode mode() const { return mode_; }

  /// Component i, 0-based, as its symbol sequence.
  std::span<const std::string> component(std::size_t i) const;

  /// The t-symbol prefix / suffix gram of component i.
  std::span<const std::string> prefix_gram(std::size_t i) const;
  std::span<const std::string> suffix_gram(std::size_t i) const;

  /// Rendered forms (concatenated, or space-joined in tokens mode).
  std::string prefix_gram_text(std::size_t i) const;
  std::string suffix_gram_text(std::size_t i) const;
  std::string component_text(std::size_t i) const;

  /// Instance file rendering, including the header line.
  std::string to_document() const;

  bool operator==(const Instance&) const = default;

 private:
  Instance(std::vector<std::vector<std::string>> components, std::size_t s,
           std::size_t t, SymbolMode mode)
      : components_(std::move(components)), s_(s), t_(t), mode_(mode) {}

  std::vector<std::vector<std::string>> components_;
  std::size_t s_;
  std::size_t t_;
  SymbolMode mode_;
};

/// Caller-supplied values for fields the document's header may also set.
/// An explicit value that contradicts the header is an error.
struct ParseOverrides {
  std::optional<std::size_t> s;
  std::optional<std::size_t> t;
  std::optional<SymbolMode> mode;
};

/// Parses an instance document: one string per line, blank lines and
/// '#' comments ignored, optional header `#s=<int> t=<int> mode=<chars|tokens>`.
/// Fields resolve as: explicit override, else header, else default
/// (mode=chars, t=1, s = symbol count of the first data line).
Instance parse_instance(std::string_view text, const ParseOverrides& overrides = {});

/// Fully explicit form.
Instance parse_instance(std::string_view text, std::size_t s, std::size_t t,
                        SymbolMode mode = SymbolMode::chars);

std::string_view to_string(SymbolMode mode);
std::optional<SymbolMode> symbol_mode_from_string(std::string_view name);

}  // namespace overlap
