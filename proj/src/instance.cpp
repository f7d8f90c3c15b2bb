#include "overlap/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "overlap/grams.hpp"

namespace overlap {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct HeaderValues {
  std::optional<std::size_t> s;
  std::optional<std::size_t> t;
  std::optional<SymbolMode> mode;
};

// A comment line is a header iff every token after '#' is a k=v pair over
// the keys {s, t, mode}. Anything else stays an ordinary comment.
std::optional<HeaderValues> parse_header(std::string_view comment_body) {
  const auto tokens = split_whitespace(comment_body);
  if (tokens.empty()) return std::nullopt;
  HeaderValues values;
  for (const auto tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    const auto key = tok.substr(0, eq);
    const auto val = tok.substr(eq + 1);
    if (key == "s") {
      values.s = parse_count(val);
      if (!values.s) return std::nullopt;
    } else if (key == "t") {
      values.t = parse_count(val);
      if (!values.t) return std::nullopt;
    } else if (key == "mode") {
      values.mode = symbol_mode_from_string(val);
      if (!values.mode) return std::nullopt;
    } else {
      return std::nullopt;
    }
  }
  return values;
}

std::vector<std::string> split_symbols(std::string_view line, SymbolMode mode,
                                       std::size_t line_no) {
  if (mode == SymbolMode::tokens) {
    std::vector<std::string> out;
    for (const auto tok : split_whitespace(line)) out.emplace_back(tok);
    return out;
  }
  try {
    return utf8_scalars(line);
  } catch (const std::invalid_argument& e) {
    throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(SymbolMode mode) {
  return mode == SymbolMode::chars ? "chars" : "tokens";
}

std::optional<SymbolMode> symbol_mode_from_string(std::string_view name) {
  if (name == "chars") return SymbolMode::chars;
  if (name == "tokens") return SymbolMode::tokens;
  return std::nullopt;
}

Instance Instance::from_components(std::vector<std::vector<std::string>> components,
                                   std::size_t t, SymbolMode mode) {
  if (components.size() < 2) {
    throw parse_error("an instance needs at least 2 strings, got " +
                      std::to_string(components.size()));
  }
  const std::size_t s = components.front().size();
  if (t < 1 || t >= s) {
    throw parse_error("overlap width t=" + std::to_string(t) +
                      " must satisfy 1 <= t < s (s=" + std::to_string(s) + ")");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    if (comp.size() != s) {
      throw parse_error("string " + std::to_string(i + 1) + " has " +
                        std::to_string(comp.size()) + " symbols, expected " +
                        std::to_string(s));
    }
    for (const auto& sym : comp) {
      if (sym.empty()) throw parse_error("empty symbol token");
      if (mode == SymbolMode::chars && utf8_scalars(sym).size() != 1) {
        throw parse_error("chars mode requires single-scalar symbols, got \"" + sym + "\"");
      }
      if (mode == SymbolMode::tokens &&
          sym.find_first_of(" \t\r\n\f\v") != std::string::npos) {
        throw parse_error("token symbols must not contain whitespace");
      }
    }
  }
  return Instance(std::move(components), s, t, mode);
}

Instance Instance::from_chars(const std::vector<std::string>& components, std::size_t t) {
  std::vector<std::vector<std::string>> split;
  split.reserve(components.size());
  for (const auto& comp : components) split.push_back(utf8_scalars(comp));
  return from_components(std::move(split), t, SymbolMode::chars);
}

std::span<const std::string> Instance::component(std::size_t i) const {
  return components_[i];
}

std::span<const std::string> Instance::prefix_gram(std::size_t i) const {
  return first_gram(component(i), t_);
}

std::span<const std::string> Instance::suffix_gram(std::size_t i) const {
  return last_gram(component(i), t_);
}

std::string Instance::prefix_gram_text(std::size_t i) const {
  return join_symbols(prefix_gram(i), mode_ == SymbolMode::tokens);
}

std::string Instance::suffix_gram_text(std::size_t i) const {
  return join_symbols(suffix_gram(i), mode_ == SymbolMode::tokens);
}

std::string Instance::component_text(std::size_t i) const {
  return join_symbols(component(i), mode_ == SymbolMode::tokens);
}

std::string Instance::to_document() const {
  std::string out = "#s=" + std::to_string(s_) + " t=" + std::to_string(t_) +
                    " mode=" + std::string(to_string(mode_)) + "\n";
  for (std::size_t i = 0; i < n(); ++i) {
    out += component_text(i);
    out += '\n';
  }
  return out;
}

Instance parse_instance(std::string_view text, const ParseOverrides& overrides) {
  std::optional<HeaderValues> header;
  std::vector<std::pair<std::string_view, std::size_t>> data_lines;  // line, 1-based no.

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto stripped = trim(line);
    if (!stripped.empty()) {
      if (stripped.front() == '#') {
        if (!header) header = parse_header(stripped.substr(1));
      } else {
        data_lines.emplace_back(stripped, line_no);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (data_lines.empty()) throw parse_error("empty instance document");

  // Explicit overrides win but must not contradict the header.
  auto resolve = [](const char* name, auto explicit_v, auto header_v) {
    if (explicit_v && header_v && *explicit_v != *header_v) {
      throw parse_error(std::string("explicit ") + name +
                        " contradicts the document header");
    }
    return explicit_v ? explicit_v : header_v;
  };
  const auto mode =
      resolve("mode", overrides.mode, header ? header->mode : std::nullopt)
          .value_or(SymbolMode::chars);
  auto s_opt = resolve("s", overrides.s, header ? header->s : std::nullopt);
  const auto t =
      resolve("t", overrides.t, header ? header->t : std::nullopt).value_or(1);

  std::vector<std::vector<std::string>> components;
  components.reserve(data_lines.size());
  for (const auto& [line, no] : data_lines) {
    auto symbols = split_symbols(line, mode, no);
    if (!s_opt) s_opt = symbols.size();
    if (symbols.size() != *s_opt) {
      throw parse_error("line " + std::to_string(no) + ": expected " +
                        std::to_string(*s_opt) + " symbols, got " +
                        std::to_string(symbols.size()));
    }
    components.push_back(std::move(symbols));
  }
  return Instance::from_components(std::move(components), t, mode);
}

Instance parse_instance(std::string_view text, std::size_t s, std::size_t t,
                        SymbolMode mode) {
  return parse_instance(text, ParseOverrides{s, t, mode});
}

}  // namespace overlap
