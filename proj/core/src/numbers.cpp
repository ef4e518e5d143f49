#include "polyface/numbers.hpp"

#include <stdexcept>

namespace polyface {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Rat parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw std::invalid_argument("empty number");
    try {
      return Int(std::string(s));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number: '" + std::string(s) + "'");
    }
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

bool is_integer(const Rat& v) { return denominator(v) == 1; }

Int to_integer(const Rat& v) {
  if (!is_integer(v)) throw std::runtime_error("expected integer, got " + to_string(v));
  return numerator(v);
}

}  // namespace polyface
