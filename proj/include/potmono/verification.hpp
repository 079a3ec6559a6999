#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "potmono/integer.hpp"

namespace potmono {

struct Witness {
  std::string check;
  std::vector<Integer> points;
};

struct CheckTally {
  std::string name;
  std::uint64_t performed = 0;
  std::uint64_t violations = 0;
};

// Outcome of an exhaustive or sampled check. Violations are content, not errors.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string subject;
  std::vector<CheckTally> checks;
  std::vector<Witness> witnesses;

  bool passed() const;
  std::uint64_t violations() const;
  CheckTally& tally(const std::string& name);
  void violation(const std::string& check, std::vector<Integer> points);
  void merge(const VerificationReport& other);
  std::string summary() const;
};

}  // namespace potmono
