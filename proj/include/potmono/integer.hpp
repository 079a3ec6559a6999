#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace potmono {

// Arbitrary precision, expression templates off so `auto` never captures a
// lazy expression.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
// Result lies in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

Integer abs(const Integer& a);

// Canonical point order: smaller |x| first, and x before -x.
// Enumerates Z as 0, 1, -1, 2, -2, ...
bool canonical_less(const Integer& a, const Integer& b);

std::string to_string(const Integer& x);
std::optional<Integer> parse_integer(std::string_view text);
std::optional<std::int64_t> to_int64(const Integer& x);

// Closed integer interval [lo, hi].
struct Window {
  Integer lo;
  Integer hi;

  bool contains(const Integer& x) const { return lo <= x && x <= hi; }
  Integer size() const { return hi >= lo ? Integer(hi - lo + 1) : Integer(0); }
};

}  // namespace potmono
