#pragma once

// Shift conjugacy on Z. A shift by k != 0 has exactly |k| orbits and no
// periodic points, and conjugacy preserves both, so a periodic-point-free
// map is conjugate to a shift iff it has finitely many orbits.

#include <functional>
#include <variant>
#include <vector>

#include "potmono/integer.hpp"
#include "potmono/presentation.hpp"
#include "potmono/verification.hpp"

namespace potmono::conjugacy {

// t(f^m(rep_i)) = i + k*m, so t(f(x)) = t(x) + k.
struct Conjugate {
  Integer k;  // >= 1
  std::function<Integer(const Integer&)> witness;
};

struct Identity {};

struct PeriodicPoints {
  std::vector<Integer> cycle;
};
struct InfinitelyManyOrbits {};

struct NotConjugate {
  std::variant<PeriodicPoints, InfinitelyManyOrbits> reason;
};

using ConjugacyReport = std::variant<Conjugate, Identity, NotConjugate>;

// Throws UnsupportedPresentation for opaque presentations.
ConjugacyReport decide_shift_conjugacy(const presentation::ValidatedBijection& f);

// t(f(x)) = t(x) + k and injectivity of t on the window. A non-Conjugate
// report is checked as: Identity iff f fixes the whole window.
VerificationReport verify_conjugacy(const presentation::ValidatedBijection& f, const ConjugacyReport& report,
                                    const Window& window);

std::string describe(const ConjugacyReport& report);

}  // namespace potmono::conjugacy
