#pragma once

#include <vector>

#include "potmono/integer.hpp"

namespace potmono {

// Orbits restricted to a window: disjoint classes covering it exactly.
struct WindowPartition {
  enum class Kind { Cycle, LineFragment };
  struct Class {
    Kind kind;
    std::vector<Integer> points;  // increasing

    bool operator==(const Class&) const = default;
  };

  Window window;
  std::vector<Class> classes;  // ordered by least point
};

}  // namespace potmono
