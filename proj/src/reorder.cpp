#include "potmono/reorder.hpp"

#include <set>

#include "potmono/errors.hpp"
#include "potmono/oracle.hpp"

namespace potmono::reorder {

using orbits::CoverFamily;
using orbits::Line;
using orbits::OrbitStructure;

namespace {

std::shared_ptr<const OrbitStructure> analyze_free(const ValidatedBijection& f) {
  auto structure = std::make_shared<const OrbitStructure>(f);
  if (auto cycle = structure->first_cycle()) throw PeriodicPointFound(cycle->cycle);
  return structure;
}

}  // namespace

OrderHandle build_order(const ValidatedBijection& f) {
  OrderHandle handle;
  handle.orbits_ = analyze_free(f);
  if (handle.orbits_->is_family_b()) return handle;

  CoverFamily cover;
  const auto& reps = handle.orbits_->representatives();
  for (std::size_t id = 0; id < reps.size(); ++id) {
    cover.sets.push_back({reps[id]});
    handle.placement_.push_back({id, 0, 0});
  }
  handle.cover_ = std::move(cover);
  return handle;
}

OrderHandle build_order_from_cover(const ValidatedBijection& f, const CoverFamily& cover) {
  OrderHandle handle;
  handle.orbits_ = analyze_free(f);
  const OrbitStructure& orbits = *handle.orbits_;
  if (orbits.is_family_b()) {
    throw UnsupportedPresentation("explicit covers need finitely many orbits");
  }
  if (auto violation = orbits::find_cover_violation(orbits, cover)) {
    throw CoverInvalid(violation->property, violation->message, violation->witness);
  }
  handle.placement_.resize(orbits.representatives().size());
  for (std::size_t alpha = 0; alpha < cover.sets.size(); ++alpha) {
    std::size_t rank = 0;
    for (const Integer& x : cover.sets[alpha]) {
      Line line = std::get<Line>(orbits.locate(x));
      handle.placement_[line.orbit_id.convert_to<std::size_t>()] = {alpha, line.step, rank++};
    }
  }
  handle.cover_ = cover;
  return handle;
}

Label OrderHandle::label(const Integer& x) const {
  Line line = std::get<Line>(orbits_->locate(x));
  if (placement_.empty()) return Label{std::move(line.orbit_id), std::move(line.step), 0};
  const Placement& p = placement_[line.orbit_id.convert_to<std::size_t>()];
  return Label{Integer(p.alpha), Integer(line.step - p.anchor_step), p.inner_rank};
}

std::strong_ordering OrderHandle::compare(const Integer& x, const Integer& y) const {
  return label(x) <=> label(y);
}

// ---------------------------------------------------------------------------

NormalForm::NormalForm(std::shared_ptr<const OrbitStructure> orbits) : orbits_(std::move(orbits)) {
  orbits::LineCount count = orbits_->line_count();
  if (!count.countably_infinite) k_ = count.count;
}

GroupElement NormalForm::h(const Integer& x) const {
  Line line = std::get<Line>(orbits_->locate(x));
  return {std::move(line.orbit_id), std::move(line.step)};
}

Integer NormalForm::h_inverse(const GroupElement& g) const {
  if (k_ && (g.index < 0 || g.index >= *k_)) {
    throw std::out_of_range("index " + to_string(g.index) + " outside Z_" + to_string(*k_));
  }
  return orbits_->point_at(g.index, g.level);
}

GroupElement NormalForm::add(const GroupElement& a, const GroupElement& b) const {
  Integer index = a.index + b.index;
  if (k_) index = floor_mod(index, *k_);
  return {std::move(index), Integer(a.level + b.level)};
}

NormalForm normal_form(const ValidatedBijection& f) { return NormalForm(analyze_free(f)); }

// ---------------------------------------------------------------------------

VerificationReport verify_order(const ValidatedBijection& f, const OrderHandle& order, const Window& window,
                                std::uint64_t triple_samples) {
  return verify_order(f, [&order](const Integer& x) { return order.label(x); }, window, triple_samples);
}

VerificationReport verify_order(const ValidatedBijection& f, const Labeler& labeler, const Window& window,
                                std::uint64_t triple_samples) {
  std::vector<Integer> points;
  std::vector<Label> labels;
  std::vector<Label> image_labels;
  for (Integer x = window.lo; x <= window.hi; ++x) {
    labels.push_back(labeler(x));
    image_labels.push_back(labeler(f.eval(x)));
    points.push_back(x);
  }
  const Integer& lo = window.lo;
  auto cached = [&](const Integer& x) -> const Label& {
    return labels[Integer(x - lo).convert_to<std::size_t>()];
  };
  VerificationReport report = oracle::brute_check_total_order(
      [&](const Integer& x, const Integer& y) { return cached(x) <=> cached(y); }, window, triple_samples);
  report.subject = "order";

  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ++pairs;
      auto before = labels[i] <=> labels[j];
      auto after = image_labels[i] <=> image_labels[j];
      if (before != after) report.violation("monotonicity", {points[i], points[j]});
    }
  }
  report.tally("monotonicity").performed = pairs;
  return report;
}

VerificationReport verify_normal_form(const ValidatedBijection& f, const NormalForm& nf, const Window& window) {
  VerificationReport report;
  report.subject = "normal form";
  report.tally("shift law");
  report.tally("round trip");
  report.tally("injectivity");
  std::set<std::pair<Integer, Integer>> images;
  std::uint64_t n = 0;
  for (Integer x = window.lo; x <= window.hi; ++x, ++n) {
    GroupElement hx = nf.h(x);
    if (nf.h(f.eval(x)) != nf.add(hx, NormalForm::shift())) report.violation("shift law", {x});
    if (nf.h_inverse(hx) != x) report.violation("round trip", {x});
    if (!images.emplace(hx.index, hx.level).second) report.violation("injectivity", {x});
  }
  for (const char* name : {"shift law", "round trip", "injectivity"}) report.tally(name).performed = n;
  return report;
}

}  // namespace potmono::reorder
