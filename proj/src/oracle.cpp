#include "potmono/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace potmono::oracle {

WindowPartition brute_orbits(const presentation::ValidatedBijection& f, const Window& window,
                             std::optional<std::uint64_t> max_steps) {
  const std::uint64_t size = window.size().convert_to<std::uint64_t>();
  const std::uint64_t bound = max_steps.value_or(2 * size + 64);

  WindowPartition out;
  out.window = window;
  std::set<Integer> assigned;
  for (Integer x = window.lo; x <= window.hi; ++x) {
    if (assigned.contains(x)) continue;
    std::set<Integer> members{x};
    bool cycle = false;

    Integer y = f.eval(x);
    for (std::uint64_t steps = 1; steps <= bound; ++steps) {
      if (y == x) {
        cycle = true;
        break;
      }
      if (window.contains(y)) members.insert(y);
      y = f.eval(y);
    }
    if (!cycle) {
      y = f.eval_inverse(x);
      for (std::uint64_t steps = 1; steps <= bound; ++steps) {
        if (window.contains(y)) members.insert(y);
        y = f.eval_inverse(y);
      }
    }
    assigned.insert(members.begin(), members.end());
    out.classes.push_back({cycle ? WindowPartition::Kind::Cycle : WindowPartition::Kind::LineFragment,
                           std::vector<Integer>(members.begin(), members.end())});
  }
  return out;
}

VerificationReport brute_check_total_order(const Comparator& cmp, const Window& window,
                                           std::uint64_t triple_samples, std::uint64_t seed) {
  VerificationReport report;
  report.subject = "total order";
  std::vector<Integer> points;
  for (Integer x = window.lo; x <= window.hi; ++x) points.push_back(x);
  const std::size_t n = points.size();

  // Pairwise relation, cached for the transitivity pass.
  std::vector<signed char> rel(n * n, 0);
  auto sign_of = [](std::strong_ordering o) -> signed char {
    return o == std::strong_ordering::less ? -1 : (o == std::strong_ordering::greater ? 1 : 0);
  };

  for (const char* name : {"reflexivity", "antisymmetry", "totality", "transitivity"}) report.tally(name);
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cmp(points[i], points[i]) != std::strong_ordering::equal) {
      report.violation("reflexivity", {points[i]});
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      signed char forward = sign_of(cmp(points[i], points[j]));
      signed char backward = sign_of(cmp(points[j], points[i]));
      rel[i * n + j] = forward;
      rel[j * n + i] = backward;
      ++pairs;
      if (forward == 0) report.violation("totality", {points[i], points[j]});
      if (forward != -backward) report.violation("antisymmetry", {points[i], points[j]});
    }
  }
  report.tally("reflexivity").performed = n;
  report.tally("totality").performed = pairs;
  report.tally("antisymmetry").performed = pairs;

  std::uint64_t triples = 0;
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++triples;
    signed char ab = rel[a * n + b];
    signed char bc = rel[b * n + c];
    signed char ca = rel[c * n + a];
    if (ab != 0 && ab == bc && bc == ca) report.violation("transitivity", {points[a], points[b], points[c]});
  };

  if (n <= 60) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (a != b && b != c && a != c) check_triple(a, b, c);
  } else if (n >= 3) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < triple_samples; ++s) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == b || b == c || a == c) {
        --s;
        continue;
      }
      check_triple(a, b, c);
    }
  }
  report.tally("transitivity").performed = triples;
  return report;
}

bool brute_strongly_discrete(const presentation::ValidatedBijection& f, const std::set<Integer>& set,
                             std::uint64_t n_bound) {
  // point -> exponent n with the point in f^n(U)
  std::map<Integer, std::int64_t> seen;
  const auto bound = static_cast<std::int64_t>(n_bound);
  for (const Integer& u : set) {
    Integer forward = u;
    Integer backward = u;
    for (std::int64_t k = 0; k <= bound; ++k) {
      for (const auto& [point, n] : {std::pair{forward, k}, std::pair{backward, -k}}) {
        auto [it, inserted] = seen.emplace(point, n);
        if (!inserted && it->second != n) return false;
      }
      forward = f.eval(forward);
      backward = f.eval_inverse(backward);
    }
  }
  return true;
}

VerificationReport compare_partitions(const WindowPartition& expected, const WindowPartition& actual) {
  VerificationReport report;
  report.subject = "orbit partition";
  auto key = [](const WindowPartition::Class& c) { return c.points.front(); };
  std::map<Integer, const WindowPartition::Class*> by_least;
  for (const auto& c : actual.classes) by_least.emplace(key(c), &c);
  report.tally("classes");
  for (const auto& c : expected.classes) {
    ++report.tally("classes").performed;
    auto it = by_least.find(key(c));
    if (it == by_least.end() || !(*it->second == c)) {
      report.violation("classes", c.points);
    }
  }
  ++report.tally("class count").performed;
  if (expected.classes.size() != actual.classes.size()) {
    report.violation("class count", {Integer(expected.classes.size()), Integer(actual.classes.size())});
  }
  return report;
}

}  // namespace potmono::oracle
