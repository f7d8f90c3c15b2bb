#include "overlap/grams.hpp"

#include <stdexcept>

namespace overlap {

namespace {

// Sequence length implied by a UTF-8 leading byte, 0 if invalid.
int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 0;
}

}  // namespace

std::vector<std::string> utf8_scalars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    const int len = sequence_length(lead);
    if (len == 0 || i + len > text.size()) {
      throw std::invalid_argument("malformed UTF-8 sequence");
    }
    char32_t cp = 0;
    switch (len) {
      case 1: cp = lead; break;
      case 2: cp = lead & 0x1Fu; break;
      case 3: cp = lead & 0x0Fu; break;
      default: cp = lead & 0x07u; break;
    }
    for (int k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw std::invalid_argument("malformed UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cont & 0x3Fu);
    }
    static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw std::invalid_argument("invalid Unicode scalar in UTF-8 input");
    }
    out.emplace_back(text.substr(i, static_cast<std::size_t>(len)));
    i += static_cast<std::size_t>(len);
  }
  return out;
}

std::span<const std::string> first_gram(std::span<const std::string> x, std::size_t k) {
  if (k < 1 || k > x.size()) {
    throw std::out_of_range("first_gram: k=" + std::to_string(k) +
                            " out of range for length " + std::to_string(x.size()));
  }
  return x.first(k);
}

std::span<const std::string> last_gram(std::span<const std::string> x, std::size_t k) {
  if (k < 1 || k > x.size()) {
    throw std::out_of_range("last_gram: k=" + std::to_string(k) +
                            " out of range for length " + std::to_string(x.size()));
  }
  return x.last(k);
}

std::string first_gram(std::string_view x, std::size_t k) {
  const auto symbols = utf8_scalars(x);
  return join_symbols(first_gram(std::span(symbols), k), false);
}

std::string last_gram(std::string_view x, std::size_t k) {
  const auto symbols = utf8_scalars(x);
  return join_symbols(last_gram(std::span(symbols), k), false);
}

std::string join_symbols(std::span<const std::string> symbols, bool spaced) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    out += symbols[i];
  }
  return out;
}

}  // namespace overlap
