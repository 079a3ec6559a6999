#pragma once

#include <functional>
#include <set>

#include "potmono/integer.hpp"
#include "potmono/presentation.hpp"
#include "potmono/reorder.hpp"
#include "potmono/verification.hpp"

namespace potmono::coloring {

enum class Color { A, B };

class Coloring {
 public:
  explicit Coloring(std::function<Color(const Integer&)> membership) : membership_(std::move(membership)) {}

  Color membership(const Integer& x) const { return membership_(x); }
  Color operator()(const Integer& x) const { return membership_(x); }

 private:
  std::function<Color(const Integer&)> membership_;
};

// A = points with even step label, B = odd. f moves every point one step,
// so both classes are f-colors.
Coloring two_coloring(const reorder::OrderHandle& order);

// U is an f-color iff U and f(U) are disjoint.
bool is_color(const presentation::ValidatedBijection& f, const std::set<Integer>& set);

VerificationReport verify_coloring(const presentation::ValidatedBijection& f, const Coloring& coloring,
                                   const Window& window);

}  // namespace potmono::coloring
