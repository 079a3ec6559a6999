#pragma once

// A new total order on Z under which a periodic-point-free bijection is
// strictly increasing, and the shift normal form (i, m) on index x Z.
//
// Each point x gets a label (alpha, step, inner_rank): alpha is the cover set
// whose orbit contains x, step is the exponent n with x in f^n(O_alpha), and
// inner_rank is the position of f^-n(x) inside O_alpha in the usual order of
// Z. Labels compare lexicographically, so f(x) differs from x only by step + 1.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "potmono/integer.hpp"
#include "potmono/orbits.hpp"
#include "potmono/presentation.hpp"
#include "potmono/verification.hpp"

namespace potmono::reorder {

using presentation::ValidatedBijection;

struct Label {
  Integer alpha;  // cover index; for a paired shift, the first pairing coordinate
  Integer step;
  std::size_t inner_rank = 0;

  std::strong_ordering operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;
};

class OrderHandle {
 public:
  Label label(const Integer& x) const;
  std::strong_ordering compare(const Integer& x, const Integer& y) const;

  const ValidatedBijection& map() const { return orbits_->map(); }
  const orbits::OrbitStructure& orbits() const { return *orbits_; }
  // Empty for the closed-form paired-shift order.
  const std::optional<orbits::CoverFamily>& cover() const { return cover_; }

 private:
  friend OrderHandle build_order(const ValidatedBijection& f);
  friend OrderHandle build_order_from_cover(const ValidatedBijection& f, const orbits::CoverFamily& cover);

  struct Placement {
    std::size_t alpha = 0;
    Integer anchor_step;  // orbit step of the cover point on this orbit
    std::size_t inner_rank = 0;
  };

  std::shared_ptr<const orbits::OrbitStructure> orbits_;
  std::optional<orbits::CoverFamily> cover_;
  std::vector<Placement> placement_;  // by orbit id
};

// Over the canonical cover (family A) or in closed form (paired shift).
// Throws PeriodicPointFound or UnsupportedPresentation.
OrderHandle build_order(const ValidatedBijection& f);
// Family A only. Throws CoverInvalid, PeriodicPointFound or UnsupportedPresentation.
OrderHandle build_order_from_cover(const ValidatedBijection& f, const orbits::CoverFamily& cover);

inline std::strong_ordering compare(const OrderHandle& h, const Integer& x, const Integer& y) {
  return h.compare(x, y);
}

struct GroupElement {
  Integer index;
  Integer level;

  bool operator==(const GroupElement&) const = default;
};

// h(f^m(rep_i)) = (i, m). With finitely many orbits the index group is Z_k.
class NormalForm {
 public:
  explicit NormalForm(std::shared_ptr<const orbits::OrbitStructure> orbits);

  // nullopt: countably infinite index set Z.
  const std::optional<Integer>& k() const { return k_; }
  GroupElement h(const Integer& x) const;
  Integer h_inverse(const GroupElement& g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  // f acts as adding (0, 1).
  static GroupElement shift() { return {0, 1}; }

 private:
  std::shared_ptr<const orbits::OrbitStructure> orbits_;
  std::optional<Integer> k_;
};

// Throws PeriodicPointFound or UnsupportedPresentation.
NormalForm normal_form(const ValidatedBijection& f);

inline GroupElement group_add(const NormalForm& nf, const GroupElement& a, const GroupElement& b) {
  return nf.add(a, b);
}

using Labeler = std::function<Label(const Integer&)>;

inline constexpr std::uint64_t kDefaultTripleSamples = 100000;

// Exhaustive pair checks of the order on the window, sampled transitivity,
// and x < y  =>  f(x) < f(y) for every window pair.
VerificationReport verify_order(const ValidatedBijection& f, const OrderHandle& order, const Window& window,
                                std::uint64_t triple_samples = kDefaultTripleSamples);
// Same checks for an arbitrary labelling compared lexicographically.
VerificationReport verify_order(const ValidatedBijection& f, const Labeler& labeler, const Window& window,
                                std::uint64_t triple_samples = kDefaultTripleSamples);

// h(f(x)) = h(x) + (0, 1) and h_inverse(h(x)) = x on the window.
VerificationReport verify_normal_form(const ValidatedBijection& f, const NormalForm& nf, const Window& window);

}  // namespace potmono::reorder
