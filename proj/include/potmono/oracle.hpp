#pragma once

// Slow, obvious reference implementations. Everything here works through
// eval / eval_inverse only, so it applies to opaque presentations too, and
// every claim is bounded by an explicit parameter.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "potmono/integer.hpp"
#include "potmono/partition.hpp"
#include "potmono/presentation.hpp"
#include "potmono/verification.hpp"

namespace potmono::oracle {

using potmono::WindowPartition;

// Iterates forward and backward from each unassigned window point, at most
// max_steps each way (default: twice the window size plus 64). A revisit of
// the start marks a cycle.
WindowPartition brute_orbits(const presentation::ValidatedBijection& f, const Window& window,
                             std::optional<std::uint64_t> max_steps = std::nullopt);

using Comparator = std::function<std::strong_ordering(const Integer&, const Integer&)>;

// All pairs for reflexivity, antisymmetry and totality; transitivity on
// `triple_samples` random triples, or on every triple when the window has at
// most 60 points.
VerificationReport brute_check_total_order(const Comparator& cmp, const Window& window,
                                           std::uint64_t triple_samples, std::uint64_t seed = 0x5eed);

// Pairwise disjointness of f^n(U) for |n| <= n_bound by direct evaluation.
bool brute_strongly_discrete(const presentation::ValidatedBijection& f, const std::set<Integer>& set,
                             std::uint64_t n_bound);

// Class-by-class comparison; the partitions must agree exactly.
VerificationReport compare_partitions(const WindowPartition& expected, const WindowPartition& actual);

}  // namespace potmono::oracle
