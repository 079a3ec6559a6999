#include "potmono/conjugacy.hpp"

#include <memory>
#include <set>

#include "potmono/errors.hpp"
#include "potmono/orbits.hpp"

namespace potmono::conjugacy {

ConjugacyReport decide_shift_conjugacy(const presentation::ValidatedBijection& f) {
  auto orbits = std::make_shared<const orbits::OrbitStructure>(f);
  if (orbits->is_family_b()) return NotConjugate{InfinitelyManyOrbits{}};
  if (f.family_a()->is_identity()) return Identity{};
  if (auto cycle = orbits->first_cycle()) return NotConjugate{PeriodicPoints{cycle->cycle}};

  Integer k = orbits->line_count().count;
  auto witness = [orbits, k](const Integer& x) {
    auto line = std::get<orbits::Line>(orbits->locate(x));
    return Integer(line.orbit_id + k * line.step);
  };
  return Conjugate{k, witness};
}

VerificationReport verify_conjugacy(const presentation::ValidatedBijection& f, const ConjugacyReport& report,
                                    const Window& window) {
  VerificationReport out;
  out.subject = "conjugacy";
  std::uint64_t n = 0;
  if (const auto* conj = std::get_if<Conjugate>(&report)) {
    out.tally("t(f(x)) = t(x) + k");
    out.tally("injectivity");
    std::set<Integer> images;
    for (Integer x = window.lo; x <= window.hi; ++x, ++n) {
      Integer tx = conj->witness(x);
      if (conj->witness(f.eval(x)) != tx + conj->k) out.violation("t(f(x)) = t(x) + k", {x});
      if (!images.insert(tx).second) out.violation("injectivity", {x});
    }
    out.tally("t(f(x)) = t(x) + k").performed = n;
    out.tally("injectivity").performed = n;
    return out;
  }
  const bool identity = std::holds_alternative<Identity>(report);
  out.tally("fixed points");
  for (Integer x = window.lo; x <= window.hi; ++x, ++n) {
    if (identity && f.eval(x) != x) out.violation("fixed points", {x});
  }
  if (const auto* refuted = std::get_if<NotConjugate>(&report)) {
    if (const auto* periodic = std::get_if<PeriodicPoints>(&refuted->reason)) {
      out.tally("cycle");
      const auto& cycle = periodic->cycle;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        ++out.tally("cycle").performed;
        if (f.eval(cycle[i]) != cycle[(i + 1) % cycle.size()]) out.violation("cycle", {cycle[i]});
      }
    }
  }
  out.tally("fixed points").performed = identity ? n : 0;
  return out;
}

std::string describe(const ConjugacyReport& report) {
  if (const auto* c = std::get_if<Conjugate>(&report)) return "Conjugate{k = " + to_string(c->k) + "}";
  if (std::holds_alternative<Identity>(report)) return "Identity";
  const auto& reason = std::get<NotConjugate>(report).reason;
  if (const auto* p = std::get_if<PeriodicPoints>(&reason)) {
    return "NotConjugate{PeriodicPoints{" + format_points(p->cycle) + "}}";
  }
  return "NotConjugate{InfinitelyManyOrbits}";
}

}  // namespace potmono::conjugacy
