#include "potmono/verification.hpp"

#include <algorithm>

#include "potmono/errors.hpp"

namespace potmono {

bool VerificationReport::passed() const { return violations() == 0; }

std::uint64_t VerificationReport::violations() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.violations;
  return total;
}

CheckTally& VerificationReport::tally(const std::string& name) {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckTally& c) { return c.name == name; });
  if (it != checks.end()) return *it;
  checks.push_back(CheckTally{name});
  return checks.back();
}

void VerificationReport::violation(const std::string& check, std::vector<Integer> points) {
  ++tally(check).violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(Witness{check, std::move(points)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) {
    CheckTally& mine = tally(c.name);
    mine.performed += c.performed;
    mine.violations += c.violations;
  }
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
}

std::string VerificationReport::summary() const {
  std::string out = subject + ": " + (passed() ? "pass" : "FAIL");
  for (const auto& c : checks) {
    out += "\n  " + c.name + ": " + std::to_string(c.performed) + " checked, " +
           std::to_string(c.violations) + " violations";
  }
  for (const auto& w : witnesses) out += "\n  witness (" + w.check + "): " + format_points(w.points);
  return out;
}

}  // namespace potmono
