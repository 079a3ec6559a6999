#pragma once

// Orbit decomposition of presented bijections of Z.
//
// Family A with translation t != 0 has exactly |t| line orbits: every line
// orbit crosses the exit window just past the patch exactly once. All cycles
// live inside the patch span. With t = 0 the map is a finitary permutation
// and every point is periodic. Family B has one line orbit per first
// coordinate of the pairing and is handled in closed form.

#include <cstddef>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include "potmono/integer.hpp"
#include "potmono/partition.hpp"
#include "potmono/presentation.hpp"

namespace potmono::orbits {

using presentation::ValidatedBijection;

// Limits on the patch span and |t| for orbit analysis. Larger presentations
// are rejected with UnsupportedPresentation rather than enumerated.
inline constexpr std::int64_t kMaxCoreSpan = std::int64_t{1} << 20;
inline constexpr std::int64_t kMaxLineCount = std::int64_t{1} << 20;

struct Periodic {
  std::vector<Integer> cycle;  // cycle[i + 1] = f(cycle[i]), starts at its canonical-least point
  std::size_t period() const { return cycle.size(); }
};

// f^step(representative(orbit_id)) is the located point.
struct Line {
  Integer orbit_id;
  Integer step;
};

using OrbitInfo = std::variant<Periodic, Line>;

struct LineCount {
  bool countably_infinite = false;
  Integer count;  // meaningful when finite

  static LineCount finite(Integer n) { return {false, std::move(n)}; }
  static LineCount infinite() { return {true, 0}; }
};

struct OrbitClassification {
  std::vector<Periodic> cycles;
  LineCount line_count;
  // Finite case: representatives[id]. Countable case: the rule i -> unpair(i, 0).
  std::vector<Integer> representatives;
  // Zero translation: every point off the patch is fixed; only the fixed
  // points inside listing_window appear in `cycles`.
  bool cofinite_fixed_tail = false;
  Window listing_window;

  Integer representative(const Integer& orbit_id) const;
};

class OrbitStructure {
 public:
  // Throws UnsupportedPresentation for opaque presentations or ones beyond
  // the analysis limits.
  explicit OrbitStructure(const ValidatedBijection& f);
  ~OrbitStructure();
  OrbitStructure(const OrbitStructure&) = delete;
  OrbitStructure& operator=(const OrbitStructure&) = delete;

  OrbitInfo locate(const Integer& x) const;
  // f^step(representative(orbit_id)).
  Integer point_at(const Integer& orbit_id, const Integer& step) const;
  Integer representative(const Integer& orbit_id) const;

  LineCount line_count() const;
  bool is_periodic_point_free() const;
  bool is_family_b() const;
  // Cycles through the patch; with zero translation every other point is fixed.
  const std::vector<Periodic>& patch_cycles() const;
  bool cofinite_fixed_tail() const;
  // The canonical-least cycle, if any point is periodic.
  std::optional<Periodic> first_cycle() const;
  // Finite line count only.
  const std::vector<Integer>& representatives() const;

  OrbitClassification classify(const Window& listing_window) const;

  // All points of a line orbit inside the window, increasing.
  std::vector<Integer> line_points_in(const Integer& orbit_id, const Window& window) const;

  // Cycles and line orbits restricted to the window.
  WindowPartition restrict_to(const Window& window) const;

  const ValidatedBijection& map() const { return *f_; }

 private:
  struct FamilyA;
  std::shared_ptr<const ValidatedBijection> f_;
  std::unique_ptr<FamilyA> a_;
  int direction_ = 0;  // family B
};

struct CoverFamily {
  std::vector<std::set<Integer>> sets;
};

inline const Window kDefaultWindow{-200, 200};

OrbitInfo orbit_of(const ValidatedBijection& f, const Integer& x);
OrbitClassification classify(const ValidatedBijection& f, const Window& listing_window = kDefaultWindow);
bool is_periodic_point_free(const ValidatedBijection& f);
// On the discrete carrier this coincides with periodic-point freeness.
bool is_potentially_monotonic(const ValidatedBijection& f);
// The neighborhood {x} has pairwise disjoint translates iff x is not periodic.
bool strongly_discrete_point(const ValidatedBijection& f, const Integer& x);
bool strongly_discrete_set(const ValidatedBijection& f, const std::set<Integer>& set);
bool strongly_discrete_set(const OrbitStructure& orbits, const std::set<Integer>& set);

// Singletons of the canonical representatives. Family A only.
CoverFamily canonical_cover(const ValidatedBijection& f);

// Greedy selection: repeatedly take the first enumerated set not yet covered
// by the orbits chosen so far, minus those orbits. Points of the set that share
// an orbit with an earlier (smaller) point of the same set are dropped as well,
// so each chosen set meets every orbit at most once. Stops once every window
// point is covered; throws CoverInsufficient if the enumeration runs out.
CoverFamily greedy_cover(const ValidatedBijection& f, const std::vector<std::set<Integer>>& enumeration,
                         const Window& window);

struct CoverViolation {
  int property;
  std::string message;
  std::vector<Integer> witness;
};

// Checks the three cover hypotheses: (1) each set's orbit is strongly
// discrete, (2) different sets lie on disjoint orbits, (3) the orbits cover.
// (1) and (2) are exact. (3) is exact for finitely many line orbits when no
// window is given, otherwise checked on the window.
std::optional<CoverViolation> find_cover_violation(const OrbitStructure& orbits, const CoverFamily& cover,
                                                   const std::optional<Window>& window = std::nullopt);

}  // namespace potmono::orbits
