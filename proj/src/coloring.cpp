#include "potmono/coloring.hpp"

namespace potmono::coloring {

Coloring two_coloring(const reorder::OrderHandle& order) {
  return Coloring([order](const Integer& x) {
    return floor_mod(order.label(x).step, Integer(2)) == 0 ? Color::A : Color::B;
  });
}

bool is_color(const presentation::ValidatedBijection& f, const std::set<Integer>& set) {
  for (const Integer& x : set) {
    if (set.contains(f.eval(x))) return false;
  }
  return true;
}

VerificationReport verify_coloring(const presentation::ValidatedBijection& f, const Coloring& coloring,
                                   const Window& window) {
  VerificationReport report;
  report.subject = "coloring";
  std::uint64_t n = 0;
  report.tally("f(x) recolored");
  for (Integer x = window.lo; x <= window.hi; ++x, ++n) {
    Integer image = f.eval(x);
    if (coloring(x) == coloring(image)) report.violation("f(x) recolored", {x, image});
  }
  report.tally("f(x) recolored").performed = n;
  return report;
}

}  // namespace potmono::coloring
