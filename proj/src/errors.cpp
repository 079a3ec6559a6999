#include "potmono/errors.hpp"

namespace potmono {

std::string format_points(const std::vector<Integer>& points) {
  std::string out = "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(points[i]);
  }
  return out + "]";
}

namespace {

std::string syntax_message(std::size_t line, std::size_t column, const std::string& expected,
                           const std::string& found) {
  return "syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
         ": expected " + expected + ", found " + found;
}

std::string bijectivity_message(const NotBijective::Witness& witness) {
  if (const auto* c = std::get_if<NotBijective::Collision>(&witness)) {
    return "not bijective: " + to_string(c->first) + " and " + to_string(c->second) +
           " both map to " + to_string(c->image);
  }
  const auto& gap = std::get<NotBijective::NoPreimage>(witness);
  return "not bijective: " + to_string(gap.value) + " has no preimage";
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::string expected,
                         std::string found)
    : Error(syntax_message(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

InvalidPatch::InvalidPatch(std::string message, std::vector<Integer> witness)
    : Error("invalid patch: " + message), witness_(std::move(witness)) {}

NotBijective::NotBijective(Witness witness)
    : Error(bijectivity_message(witness)), witness_(std::move(witness)) {}

PeriodicPointFound::PeriodicPointFound(std::vector<Integer> cycle)
    : Error("periodic point found: cycle " + format_points(cycle)), cycle_(std::move(cycle)) {}

CoverInvalid::CoverInvalid(int property, std::string message, std::vector<Integer> witness)
    : Error("cover violates property " + std::to_string(property) + ": " + message + " " +
            format_points(witness)),
      property_(property),
      witness_(std::move(witness)) {}

CoverInsufficient::CoverInsufficient(Integer point)
    : Error("cover enumeration exhausted; " + to_string(point) + " is not covered"),
      point_(std::move(point)) {}

}  // namespace potmono
