#include "potmono/presentation.hpp"

#include <set>

#include "potmono/errors.hpp"

namespace potmono::presentation {

// ---------------------------------------------------------------------------
// Family A

TranslationPresentation::TranslationPresentation(Integer shift, std::map<Integer, Integer> patch)
    : shift_(std::move(shift)) {
  for (auto& [key, value] : patch) {
    if (value != key + shift_) patch_.emplace(key, value);
  }
  for (const auto& [key, value] : patch_) inverse_patch_.emplace(value, key);
}

TranslationPresentation TranslationPresentation::translation(Integer shift) {
  return TranslationPresentation(std::move(shift), {});
}

namespace {

// A contiguous patch between two different tail displacements is never a
// bijection (the net flow across a cut is the same at both ends). Find the
// concrete witness.
NotBijective::Witness mismatched_tail_witness(const MapAtom& atom,
                                              const std::map<Integer, Integer>& patch) {
  const Integer& up = atom.tail_up;
  const Integer& down = atom.tail_down;
  const Integer lo = patch.begin()->first;
  const Integer hi = patch.rbegin()->first;
  // Upper tail image: [hi + up + 1, inf); lower tail image: (-inf, lo + down - 1].
  const Integer upper_start = hi + up + 1;
  const Integer lower_end = lo + down - 1;
  if (lower_end >= upper_start) {
    return NotBijective::Collision{Integer(hi + 1), Integer(upper_start - down), upper_start};
  }
  for (const auto& [key, value] : patch) {
    if (value >= upper_start) return NotBijective::Collision{key, Integer(value - up), value};
    if (value <= lower_end) return NotBijective::Collision{key, Integer(value - down), value};
  }
  // Every value lies in the gap [lo + down, hi + up]; the gap is larger than
  // the patch, so some gap point is missed.
  std::set<Integer> values;
  for (const auto& entry : patch) values.insert(entry.second);
  Integer candidate = lo + down;
  for (const Integer& v : values) {
    if (v != candidate) break;
    ++candidate;
  }
  return NotBijective::NoPreimage{candidate};
}

}  // namespace

TranslationPresentation TranslationPresentation::from_atom(const MapAtom& atom) {
  std::map<Integer, Integer> patch;
  std::map<Integer, Integer> seen_values;
  for (const auto& [key, value] : atom.entries) {
    if (!patch.emplace(key, value).second) {
      throw InvalidPatch("duplicate key " + to_string(key), {key});
    }
    auto [it, inserted] = seen_values.emplace(value, key);
    if (!inserted) {
      throw InvalidPatch("keys " + to_string(it->second) + " and " + to_string(key) +
                             " share the value " + to_string(value),
                         {it->second, key});
    }
  }

  if (atom.tail_up != atom.tail_down) {
    if (patch.empty()) {
      throw InvalidPatch("an empty patch requires tail+ = tail-", {});
    }
    Integer expected = patch.begin()->first;
    for (const auto& entry : patch) {
      if (entry.first != expected) {
        throw InvalidPatch("patch keys skip " + to_string(expected) +
                               "; gaps need tail+ = tail-",
                           {expected});
      }
      ++expected;
    }
    throw NotBijective(mismatched_tail_witness(atom, patch));
  }

  // Equal tails: every non-key n goes to n + t, so the map is a bijection
  // exactly when the patch values are the keys shifted by t.
  const Integer& shift = atom.tail_up;
  for (const auto& [key, value] : patch) {
    Integer source = value - shift;
    if (!patch.contains(source)) throw NotBijective(NotBijective::Collision{source, key, value});
  }
  return TranslationPresentation(shift, std::move(patch));
}

std::optional<Integer> TranslationPresentation::lo() const {
  if (patch_.empty()) return std::nullopt;
  return patch_.begin()->first;
}

std::optional<Integer> TranslationPresentation::hi() const {
  if (patch_.empty()) return std::nullopt;
  return patch_.rbegin()->first;
}

Integer TranslationPresentation::eval(const Integer& n) const {
  if (auto it = patch_.find(n); it != patch_.end()) return it->second;
  return n + shift_;
}

Integer TranslationPresentation::eval_inverse(const Integer& n) const {
  if (auto it = inverse_patch_.find(n); it != inverse_patch_.end()) return it->second;
  return n - shift_;
}

TranslationPresentation TranslationPresentation::inverse() const {
  return TranslationPresentation(-shift_, inverse_patch_);
}

TranslationPresentation TranslationPresentation::compose(const TranslationPresentation& outer,
                                                         const TranslationPresentation& inner) {
  // Off the inner patch and off the preimage of the outer patch, both maps
  // translate, so the composite translates by the sum.
  std::map<Integer, Integer> patch;
  for (const auto& entry : inner.patch_) patch.emplace(entry.first, Integer());
  for (const auto& entry : outer.patch_) patch.emplace(entry.first - inner.shift_, Integer());
  for (auto& [key, value] : patch) value = outer.eval(inner.eval(key));
  return TranslationPresentation(outer.shift_ + inner.shift_, std::move(patch));
}

// ---------------------------------------------------------------------------
// Pairing

Integer zigzag(const Integer& n) {
  if (n == 0) return 0;
  if (n % 2 == 1) return (n + 1) / 2;
  return -(n / 2);
}

Integer unzigzag(const Integer& m) {
  if (m > 0) return 2 * m - 1;
  return -2 * m;
}

namespace {

Integer cantor(const Integer& a, const Integer& b) {
  Integer w = a + b;
  return w * (w + 1) / 2 + b;
}

std::pair<Integer, Integer> uncantor(const Integer& n) {
  Integer w = (boost::multiprecision::sqrt(Integer(8 * n + 1)) - 1) / 2;
  Integer b = n - w * (w + 1) / 2;
  return {w - b, b};
}

}  // namespace

std::pair<Integer, Integer> pair(const Integer& m) {
  auto [a, b] = uncantor(unzigzag(m));
  return {zigzag(a), zigzag(b)};
}

Integer unpair(const Integer& i, const Integer& k) {
  return zigzag(cantor(unzigzag(i), unzigzag(k)));
}

// ---------------------------------------------------------------------------
// Validated form

ValidatedBijection::ValidatedBijection(Canonical canonical) : canonical_(std::move(canonical)) {}

Capability ValidatedBijection::capability() const {
  return std::holds_alternative<Opaque>(canonical_) ? Capability::EvalOnly
                                                    : Capability::FullAnalysis;
}

const TranslationPresentation* ValidatedBijection::family_a() const {
  return std::get_if<TranslationPresentation>(&canonical_);
}

const PairedShiftPresentation* ValidatedBijection::family_b() const {
  return std::get_if<PairedShiftPresentation>(&canonical_);
}

namespace {

Integer paired_step(const Integer& n, int delta) {
  auto [i, k] = pair(n);
  return unpair(i, k + delta);
}

}  // namespace

Integer ValidatedBijection::eval(const Integer& n) const {
  if (const auto* a = family_a()) return a->eval(n);
  if (const auto* b = family_b()) return paired_step(n, b->direction);
  const auto& node = std::get<Opaque>(canonical_);
  if (node.op == Opaque::Op::Inverse) return node.first->eval_inverse(n);
  return node.first->eval(node.second->eval(n));
}

Integer ValidatedBijection::eval_inverse(const Integer& n) const {
  if (const auto* a = family_a()) return a->eval_inverse(n);
  if (const auto* b = family_b()) return paired_step(n, -b->direction);
  const auto& node = std::get<Opaque>(canonical_);
  if (node.op == Opaque::Op::Inverse) return node.first->eval(n);
  return node.second->eval_inverse(node.first->eval_inverse(n));
}

namespace {

ValidatedBijection invert(ValidatedBijection f) {
  if (const auto* a = f.family_a()) return ValidatedBijection(a->inverse());
  if (const auto* b = f.family_b()) {
    return ValidatedBijection(PairedShiftPresentation{-b->direction});
  }
  const auto& node = std::get<ValidatedBijection::Opaque>(f.canonical());
  if (node.op == ValidatedBijection::Opaque::Op::Inverse) return *node.first;
  return ValidatedBijection(ValidatedBijection::Opaque{
      ValidatedBijection::Opaque::Op::Inverse,
      std::make_shared<const ValidatedBijection>(std::move(f)), nullptr});
}

ValidatedBijection compose(ValidatedBijection outer, ValidatedBijection inner) {
  if (outer.family_a() && inner.family_a()) {
    return ValidatedBijection(TranslationPresentation::compose(*outer.family_a(), *inner.family_a()));
  }
  return ValidatedBijection(ValidatedBijection::Opaque{
      ValidatedBijection::Opaque::Op::Compose,
      std::make_shared<const ValidatedBijection>(std::move(outer)),
      std::make_shared<const ValidatedBijection>(std::move(inner))});
}

}  // namespace

ValidatedBijection validate(const BijectionExpr& expr) {
  return std::visit(
      [](const auto& node) -> ValidatedBijection {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MapAtom>) {
          return ValidatedBijection(TranslationPresentation::from_atom(node));
        } else if constexpr (std::is_same_v<T, PairedShiftPresentation>) {
          return ValidatedBijection(node);
        } else if constexpr (std::is_same_v<T, InverseNode>) {
          return invert(validate(*node.operand));
        } else {
          return compose(validate(*node.outer), validate(*node.inner));
        }
      },
      expr.node);
}

std::string format(const ValidatedBijection& f) {
  if (const auto* a = f.family_a()) {
    std::string out = "map { tail+ = " + to_string(a->shift()) +
                      "; tail- = " + to_string(a->shift()) + "; patch {";
    bool first = true;
    for (const auto& [key, value] : a->patch()) {
      out += first ? " " : ", ";
      out += to_string(key) + " -> " + to_string(value);
      first = false;
    }
    return out + (first ? "} }" : " } }");
  }
  if (const auto* b = f.family_b()) return b->direction > 0 ? "paired_shift" : "paired_shift_inv";
  const auto& node = std::get<ValidatedBijection::Opaque>(f.canonical());
  if (node.op == ValidatedBijection::Opaque::Op::Inverse) {
    return "inverse(" + format(*node.first) + ")";
  }
  return "compose(" + format(*node.first) + ", " + format(*node.second) + ")";
}

}  // namespace potmono::presentation
