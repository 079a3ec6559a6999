#include "potmono/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "potmono/errors.hpp"

namespace potmono::orbits {

using presentation::PairedShiftPresentation;
using presentation::TranslationPresentation;

namespace {

void rotate_to_canonical_start(std::vector<Integer>& cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end(), canonical_less);
  std::rotate(cycle.begin(), least, cycle.end());
}

bool cycle_less(const Periodic& a, const Periodic& b) {
  return canonical_less(a.cycle.front(), b.cycle.front());
}

std::size_t to_index(const Integer& x) { return x.convert_to<std::size_t>(); }

}  // namespace

// All orbit work happens in normalized coordinates u = sign * x, in which the
// map g(u) = sign * f(sign * u) translates by |t| >= 0 off its patch.
struct OrbitStructure::FamilyA {
  struct LineRecord {
    Integer exit;                // the orbit's unique point in [hi + 1, hi + step], position 0
    std::vector<Integer> trace;  // g^-1(exit), g^-2(exit), ... while >= lo
    Integer tail_start;          // first backward iterate below lo
    Integer rep_pos;             // position of the representative relative to exit
    std::size_t id = 0;
  };
  struct CoreEntry {
    bool periodic = false;
    std::size_t index = 0;    // line record or cycle
    std::int64_t pos = 0;     // position relative to the exit point (lines)
  };

  int sign = 1;
  Integer step;  // |t|
  std::map<Integer, Integer> patch;
  std::map<Integer, Integer> inverse_patch;
  Integer lo;
  Integer hi;  // hi = lo - 1 for an empty patch

  std::vector<LineRecord> lines;
  std::vector<std::size_t> line_of_id;
  std::vector<Integer> representatives;  // original coordinates, by id
  std::vector<CoreEntry> core;
  std::vector<Periodic> cycles;           // original coordinates, sorted
  std::map<Integer, std::size_t> cycle_of_key;  // zero translation only

  explicit FamilyA(const TranslationPresentation& p);

  Integer g(const Integer& u) const {
    if (auto it = patch.find(u); it != patch.end()) return it->second;
    return u + step;
  }
  Integer g_inverse(const Integer& u) const {
    if (auto it = inverse_patch.find(u); it != inverse_patch.end()) return it->second;
    return u - step;
  }
  Integer original(const Integer& u) const { return sign > 0 ? u : Integer(-u); }

  void build_lines();
  void build_cycles_moving();
  void build_cycles_fixed_tail();

  // Position of u relative to its line's exit point; u must not be periodic.
  std::pair<std::size_t, Integer> line_position(const Integer& u) const;
  Integer point_at_position(const LineRecord& line, const Integer& pos) const;
  OrbitInfo locate(const Integer& x) const;
};

OrbitStructure::FamilyA::FamilyA(const TranslationPresentation& p) {
  sign = p.shift() < 0 ? -1 : 1;
  step = abs(p.shift());
  for (const auto& [key, value] : p.patch()) {
    patch.emplace(original(key), original(value));
    inverse_patch.emplace(original(value), original(key));
  }
  if (patch.empty()) {
    lo = 0;
    hi = -1;
  } else {
    lo = patch.begin()->first;
    hi = patch.rbegin()->first;
  }
  if (hi - lo + 1 > kMaxCoreSpan) {
    throw UnsupportedPresentation("patch span " + to_string(Integer(hi - lo + 1)) +
                                  " exceeds the analysis limit of " + std::to_string(kMaxCoreSpan));
  }
  if (step > kMaxLineCount) {
    throw UnsupportedPresentation("translation " + to_string(p.shift()) +
                                  " exceeds the analysis limit of " + std::to_string(kMaxLineCount) +
                                  " line orbits");
  }
  if (step == 0) {
    build_cycles_fixed_tail();
  } else {
    core.resize(to_index(Integer(hi - lo + 1)));
    build_lines();
    build_cycles_moving();
  }
}

void OrbitStructure::FamilyA::build_lines() {
  const std::size_t core_size = core.size();
  const std::size_t count = to_index(step);
  lines.resize(count);

  struct Candidate {
    Integer point;  // original coordinates
    Integer pos;
  };
  auto better = [](const Candidate& a, const Candidate& b) { return canonical_less(a.point, b.point); };

  for (std::size_t j = 0; j < count; ++j) {
    LineRecord& line = lines[j];
    line.exit = hi + 1 + j;
    Integer u = g_inverse(line.exit);
    while (u >= lo) {
      if (line.trace.size() > core_size) throw BudgetExceeded("backward trace left the patch span");
      line.trace.push_back(u);
      CoreEntry& entry = core[to_index(Integer(u - lo))];
      entry.periodic = false;
      entry.index = j;
      entry.pos = -static_cast<std::int64_t>(line.trace.size());
      u = g_inverse(u);
    }
    line.tail_start = u;

    // Representative: canonical-least point of the orbit. Away from the patch
    // the orbit is two arithmetic rays; only their ends and their points
    // nearest to zero can win.
    std::vector<Candidate> candidates;
    auto add_ray = [&](const Integer& base, const Integer& delta, const Integer& base_pos, int pos_dir) {
      candidates.push_back({original(base), base_pos});
      if ((base > 0 && delta < 0) || (base < 0 && delta > 0)) {
        Integer i = abs(base) / abs(delta);
        for (Integer k : {i, Integer(i + 1)}) {
          candidates.push_back({original(Integer(base + k * delta)), Integer(base_pos + pos_dir * k)});
        }
      }
    };
    add_ray(line.exit, step, 0, +1);
    for (std::size_t i = 0; i < line.trace.size(); ++i) {
      candidates.push_back({original(line.trace[i]), Integer(-static_cast<std::int64_t>(i + 1))});
    }
    add_ray(line.tail_start, -step, Integer(-static_cast<std::int64_t>(line.trace.size() + 1)), -1);
    const Candidate& best = *std::min_element(candidates.begin(), candidates.end(), better);
    line.rep_pos = best.pos;
    representatives.push_back(best.point);
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(representatives[a], representatives[b]);
  });
  std::vector<Integer> sorted_reps;
  sorted_reps.reserve(count);
  line_of_id = order;
  for (std::size_t id = 0; id < count; ++id) {
    lines[order[id]].id = id;
    sorted_reps.push_back(representatives[order[id]]);
  }
  representatives = std::move(sorted_reps);
}

void OrbitStructure::FamilyA::build_cycles_moving() {
  // Cycles cannot reach past the patch span: above hi the orbit escapes,
  // below lo it only ever came from further below. So the untraced core
  // points are exactly the periodic ones.
  const std::size_t core_size = core.size();
  std::vector<bool> seen(core_size, false);
  for (const auto& line : lines) {
    for (const Integer& u : line.trace) seen[to_index(Integer(u - lo))] = true;
  }
  std::vector<std::vector<Integer>> raw;
  for (std::size_t i = 0; i < core_size; ++i) {
    if (seen[i]) continue;
    std::vector<Integer> cycle;
    Integer start = lo + i;
    Integer u = start;
    do {
      if (u < lo || u > hi || cycle.size() > core_size) {
        throw BudgetExceeded("periodic point left the patch span");
      }
      seen[to_index(Integer(u - lo))] = true;
      cycle.push_back(original(u));
      u = g(u);
    } while (u != start);
    raw.push_back(std::move(cycle));
  }
  for (auto& cycle : raw) {
    rotate_to_canonical_start(cycle);
    cycles.push_back(Periodic{std::move(cycle)});
  }
  std::sort(cycles.begin(), cycles.end(), cycle_less);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const Integer& x : cycles[c].cycle) {
      CoreEntry& entry = core[to_index(Integer(sign * x - lo))];
      entry.periodic = true;
      entry.index = c;
    }
  }
}

void OrbitStructure::FamilyA::build_cycles_fixed_tail() {
  // Zero translation: the patch permutes its own keys.
  std::map<Integer, bool> visited;
  for (const auto& entry : patch) visited.emplace(entry.first, false);
  for (auto& [start, done] : visited) {
    if (done) continue;
    std::vector<Integer> cycle;
    Integer u = start;
    do {
      if (cycle.size() > patch.size()) throw BudgetExceeded("patch cycle longer than the patch");
      visited[u] = true;
      cycle.push_back(original(u));
      u = g(u);
    } while (u != start);
    rotate_to_canonical_start(cycle);
    cycles.push_back(Periodic{std::move(cycle)});
  }
  std::sort(cycles.begin(), cycles.end(), cycle_less);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (const Integer& x : cycles[c].cycle) cycle_of_key.emplace(x, c);
  }
}

std::pair<std::size_t, Integer> OrbitStructure::FamilyA::line_position(const Integer& u) const {
  if (u > hi) {
    Integer j = floor_mod(Integer(u - hi - 1), step);
    Integer exit = hi + 1 + j;
    return {to_index(j), Integer((u - exit) / step)};
  }
  if (u < lo) {
    Integer q = ceil_div(Integer(lo - u), step);
    Integer y = u + q * step;
    if (y > hi) return {to_index(Integer(y - hi - 1)), Integer(-q)};
    const CoreEntry& entry = core[to_index(Integer(y - lo))];
    return {entry.index, Integer(entry.pos - q)};
  }
  const CoreEntry& entry = core[to_index(Integer(u - lo))];
  return {entry.index, Integer(entry.pos)};
}

Integer OrbitStructure::FamilyA::point_at_position(const LineRecord& line, const Integer& pos) const {
  if (pos >= 0) return line.exit + pos * step;
  const Integer depth = -pos;
  if (depth <= line.trace.size()) return line.trace[to_index(Integer(depth - 1))];
  return line.tail_start - (depth - line.trace.size() - 1) * step;
}

OrbitInfo OrbitStructure::FamilyA::locate(const Integer& x) const {
  if (step == 0) {
    if (auto it = cycle_of_key.find(x); it != cycle_of_key.end()) return cycles[it->second];
    return Periodic{{x}};
  }
  const Integer u = sign * x;
  if (u >= lo && u <= hi) {
    const CoreEntry& entry = core[to_index(Integer(u - lo))];
    if (entry.periodic) return cycles[entry.index];
  }
  auto [index, pos] = line_position(u);
  const LineRecord& line = lines[index];
  return Line{Integer(line.id), Integer(pos - line.rep_pos)};
}

// ---------------------------------------------------------------------------

OrbitStructure::OrbitStructure(const ValidatedBijection& f)
    : f_(std::make_shared<const ValidatedBijection>(f)) {
  if (const auto* a = f.family_a()) {
    a_ = std::make_unique<FamilyA>(*a);
  } else if (const auto* b = f.family_b()) {
    direction_ = b->direction;
  } else {
    throw UnsupportedPresentation("orbit analysis needs a family-A or paired-shift presentation, not " +
                                  presentation::format(f));
  }
}

OrbitStructure::~OrbitStructure() = default;

bool OrbitStructure::is_family_b() const { return a_ == nullptr; }

OrbitInfo OrbitStructure::locate(const Integer& x) const {
  if (a_) return a_->locate(x);
  auto [i, k] = presentation::pair(x);
  return Line{i, Integer(direction_ * k)};
}

Integer OrbitStructure::point_at(const Integer& orbit_id, const Integer& step) const {
  if (!a_) return presentation::unpair(orbit_id, Integer(direction_ * step));
  if (orbit_id < 0 || orbit_id >= a_->line_of_id.size()) {
    throw std::out_of_range("no line orbit with id " + to_string(orbit_id));
  }
  const auto& line = a_->lines[a_->line_of_id[to_index(orbit_id)]];
  return a_->original(a_->point_at_position(line, Integer(line.rep_pos + step)));
}

Integer OrbitStructure::representative(const Integer& orbit_id) const { return point_at(orbit_id, 0); }

LineCount OrbitStructure::line_count() const {
  if (!a_) return LineCount::infinite();
  return LineCount::finite(a_->step);
}

bool OrbitStructure::is_periodic_point_free() const {
  if (!a_) return true;
  return a_->step != 0 && a_->cycles.empty();
}

const std::vector<Periodic>& OrbitStructure::patch_cycles() const {
  static const std::vector<Periodic> none;
  return a_ ? a_->cycles : none;
}

bool OrbitStructure::cofinite_fixed_tail() const { return a_ && a_->step == 0; }

std::optional<Periodic> OrbitStructure::first_cycle() const {
  if (!a_) return std::nullopt;
  std::optional<Periodic> best;
  if (!a_->cycles.empty()) best = a_->cycles.front();
  if (a_->step == 0) {
    // Least fixed point off the patch in the order 0, 1, -1, 2, -2, ...
    for (Integer n = 0;; ++n) {
      Integer x = presentation::zigzag(n);
      if (!a_->cycle_of_key.contains(x)) {
        if (!best || canonical_less(x, best->cycle.front())) best = Periodic{{x}};
        break;
      }
    }
  }
  return best;
}

const std::vector<Integer>& OrbitStructure::representatives() const {
  if (!a_) throw UnsupportedPresentation("paired shift has infinitely many line orbits");
  return a_->representatives;
}

OrbitClassification OrbitStructure::classify(const Window& listing_window) const {
  OrbitClassification out;
  out.listing_window = listing_window;
  out.line_count = line_count();
  if (!a_) return out;
  out.representatives = a_->representatives;
  out.cycles = a_->cycles;
  out.cofinite_fixed_tail = a_->step == 0;
  if (out.cofinite_fixed_tail) {
    for (Integer x = listing_window.lo; x <= listing_window.hi; ++x) {
      if (!a_->cycle_of_key.contains(x)) out.cycles.push_back(Periodic{{x}});
    }
    std::sort(out.cycles.begin(), out.cycles.end(), cycle_less);
  }
  return out;
}

std::vector<Integer> OrbitStructure::line_points_in(const Integer& orbit_id, const Window& window) const {
  std::vector<Integer> out;
  if (!a_) {
    for (Integer x = window.lo; x <= window.hi; ++x) {
      if (presentation::pair(x).first == orbit_id) out.push_back(x);
    }
    return out;
  }
  const auto& line = a_->lines[a_->line_of_id[to_index(orbit_id)]];
  const Integer& step = a_->step;
  Integer ulo = a_->sign > 0 ? window.lo : Integer(-window.hi);
  Integer uhi = a_->sign > 0 ? window.hi : Integer(-window.lo);
  // Forward ray: exit + i*step, i >= 0.
  Integer first = std::max(ulo, line.exit);
  first = line.exit + ceil_div(Integer(first - line.exit), step) * step;
  for (Integer u = first; u <= uhi; u += step) out.push_back(a_->original(u));
  for (const Integer& u : line.trace) {
    if (u >= ulo && u <= uhi) out.push_back(a_->original(u));
  }
  // Backward ray: tail_start - i*step, i >= 0.
  Integer top = std::min(uhi, line.tail_start);
  top = line.tail_start - ceil_div(Integer(line.tail_start - top), step) * step;
  for (Integer u = top; u >= ulo; u -= step) out.push_back(a_->original(u));
  std::sort(out.begin(), out.end());
  return out;
}

WindowPartition OrbitStructure::restrict_to(const Window& window) const {
  WindowPartition out;
  out.window = window;
  for (const auto& cycle : classify(window).cycles) {
    std::vector<Integer> inside;
    for (const Integer& x : cycle.cycle) {
      if (window.contains(x)) inside.push_back(x);
    }
    if (inside.empty()) continue;
    std::sort(inside.begin(), inside.end());
    out.classes.push_back({WindowPartition::Kind::Cycle, std::move(inside)});
  }
  if (a_) {
    for (std::size_t id = 0; id < a_->representatives.size(); ++id) {
      auto points = line_points_in(Integer(id), window);
      if (!points.empty()) out.classes.push_back({WindowPartition::Kind::LineFragment, std::move(points)});
    }
  } else {
    std::map<Integer, std::vector<Integer>> by_orbit;
    for (Integer x = window.lo; x <= window.hi; ++x) {
      by_orbit[std::get<Line>(locate(x)).orbit_id].push_back(x);
    }
    for (auto& [id, points] : by_orbit) {
      out.classes.push_back({WindowPartition::Kind::LineFragment, std::move(points)});
    }
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.points.front() < b.points.front(); });
  return out;
}

Integer OrbitClassification::representative(const Integer& orbit_id) const {
  if (line_count.countably_infinite) return presentation::unpair(orbit_id, 0);
  return representatives.at(to_index(orbit_id));
}

// ---------------------------------------------------------------------------

OrbitInfo orbit_of(const ValidatedBijection& f, const Integer& x) { return OrbitStructure(f).locate(x); }

OrbitClassification classify(const ValidatedBijection& f, const Window& listing_window) {
  return OrbitStructure(f).classify(listing_window);
}

bool is_periodic_point_free(const ValidatedBijection& f) { return OrbitStructure(f).is_periodic_point_free(); }

bool is_potentially_monotonic(const ValidatedBijection& f) { return is_periodic_point_free(f); }

bool strongly_discrete_point(const ValidatedBijection& f, const Integer& x) {
  return std::holds_alternative<Line>(orbit_of(f, x));
}

bool strongly_discrete_set(const OrbitStructure& orbits, const std::set<Integer>& set) {
  std::set<Integer> seen;
  for (const Integer& x : set) {
    OrbitInfo info = orbits.locate(x);
    const auto* line = std::get_if<Line>(&info);
    if (!line) return false;
    if (!seen.insert(line->orbit_id).second) return false;
  }
  return true;
}

bool strongly_discrete_set(const ValidatedBijection& f, const std::set<Integer>& set) {
  return strongly_discrete_set(OrbitStructure(f), set);
}

CoverFamily canonical_cover(const ValidatedBijection& f) {
  OrbitStructure orbits(f);
  if (orbits.is_family_b()) {
    throw UnsupportedPresentation("the canonical cover of a paired shift is infinite");
  }
  if (auto cycle = orbits.first_cycle()) throw PeriodicPointFound(cycle->cycle);
  CoverFamily cover;
  for (const Integer& rep : orbits.representatives()) cover.sets.push_back({rep});
  return cover;
}

CoverFamily greedy_cover(const ValidatedBijection& f, const std::vector<std::set<Integer>>& enumeration,
                         const Window& window) {
  OrbitStructure orbits(f);
  if (auto cycle = orbits.first_cycle()) throw PeriodicPointFound(cycle->cycle);

  std::vector<Integer> window_ids;
  for (Integer x = window.lo; x <= window.hi; ++x) {
    window_ids.push_back(std::get<Line>(orbits.locate(x)).orbit_id);
  }
  std::set<Integer> covered;
  auto window_covered = [&] {
    return std::all_of(window_ids.begin(), window_ids.end(),
                       [&](const Integer& id) { return covered.contains(id); });
  };

  CoverFamily out;
  for (const auto& candidate : enumeration) {
    if (window_covered()) break;
    std::set<Integer> chosen;
    std::set<Integer> chosen_ids;
    for (const Integer& x : candidate) {
      Integer id = std::get<Line>(orbits.locate(x)).orbit_id;
      if (covered.contains(id) || chosen_ids.contains(id)) continue;
      chosen.insert(x);
      chosen_ids.insert(id);
    }
    if (chosen.empty()) continue;
    covered.insert(chosen_ids.begin(), chosen_ids.end());
    out.sets.push_back(std::move(chosen));
  }
  for (std::size_t i = 0; i < window_ids.size(); ++i) {
    if (!covered.contains(window_ids[i])) throw CoverInsufficient(Integer(window.lo + i));
  }
  return out;
}

std::optional<CoverViolation> find_cover_violation(const OrbitStructure& orbits, const CoverFamily& cover,
                                                   const std::optional<Window>& window) {
  // orbit id -> (set index, point)
  std::map<Integer, std::pair<std::size_t, Integer>> owner;
  for (std::size_t alpha = 0; alpha < cover.sets.size(); ++alpha) {
    const auto& set = cover.sets[alpha];
    if (set.empty()) return CoverViolation{1, "set " + std::to_string(alpha) + " is empty", {}};
    for (const Integer& x : set) {
      OrbitInfo info = orbits.locate(x);
      if (const auto* cycle = std::get_if<Periodic>(&info)) {
        return CoverViolation{1, "periodic point in set " + std::to_string(alpha), cycle->cycle};
      }
      const Integer& id = std::get<Line>(info).orbit_id;
      auto [it, inserted] = owner.emplace(id, std::make_pair(alpha, x));
      if (inserted) continue;
      if (it->second.first == alpha) {
        return CoverViolation{1, "set " + std::to_string(alpha) + " meets one orbit twice",
                              {it->second.second, x}};
      }
      return CoverViolation{2,
                            "sets " + std::to_string(it->second.first) + " and " + std::to_string(alpha) +
                                " share an orbit",
                            {it->second.second, x}};
    }
  }
  if (window) {
    for (Integer x = window->lo; x <= window->hi; ++x) {
      OrbitInfo info = orbits.locate(x);
      const auto* line = std::get_if<Line>(&info);
      if (!line || !owner.contains(line->orbit_id)) {
        return CoverViolation{3, "point not covered", {x}};
      }
    }
    return std::nullopt;
  }
  if (orbits.is_family_b()) {
    throw UnsupportedPresentation("cover of infinitely many orbits can only be checked on a window");
  }
  if (auto cycle = orbits.first_cycle()) return CoverViolation{3, "periodic point not covered", cycle->cycle};
  const auto& reps = orbits.representatives();
  for (std::size_t id = 0; id < reps.size(); ++id) {
    if (!owner.contains(Integer(id))) return CoverViolation{3, "orbit not covered", {reps[id]}};
  }
  return std::nullopt;
}

}  // namespace potmono::orbits
