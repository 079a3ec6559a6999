#include "potmono/integer.hpp"

#include <cctype>

namespace potmono {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += (b < 0 ? Integer(-b) : b);
  return r;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

bool canonical_less(const Integer& a, const Integer& b) {
  Integer abs_a = abs(a);
  Integer abs_b = abs(b);
  if (abs_a != abs_b) return abs_a < abs_b;
  return a > b;
}

std::string to_string(const Integer& x) { return x.str(); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i == text.size()) return std::nullopt;
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return std::nullopt;
  return x.convert_to<std::int64_t>();
}

}  // namespace potmono
