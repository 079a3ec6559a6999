#pragma once

// Textual presentations of bijections of Z and their canonical forms.
//
// Two decidable families are supported:
//   family A  "map { tail+ = t; tail- = t; patch { k -> v, ... } }"
//             translation by t away from a finite patch,
//   family B  "paired_shift" / "paired_shift_inv"
//             the shift (i, k) -> (i, k +/- 1) pulled back through the fixed
//             pairing Z -> Z x Z.
// Inverses and compositions inside one family normalize back into that
// family. Anything else is kept as an opaque tree that can only be evaluated.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "potmono/integer.hpp"

namespace potmono::presentation {

// A map block as written, before any checking.
struct MapAtom {
  Integer tail_up;
  Integer tail_down;
  std::vector<std::pair<Integer, Integer>> entries;
};

struct PairedShiftPresentation {
  int direction = 1;  // +1 or -1

  bool operator==(const PairedShiftPresentation&) const = default;
};

struct BijectionExpr;
using ExprPtr = std::shared_ptr<const BijectionExpr>;

struct InverseNode {
  ExprPtr operand;
};

// compose(outer, inner) is x -> outer(inner(x)).
struct ComposeNode {
  ExprPtr outer;
  ExprPtr inner;
};

struct BijectionExpr {
  std::variant<MapAtom, PairedShiftPresentation, InverseNode, ComposeNode> node;
};

// Canonical family-A bijection: n -> patch(n) for patch keys, n -> n + t
// everywhere else. Entries that agree with the translation are dropped, so
// two presentations of the same map compare equal.
class TranslationPresentation {
 public:
  // Checks bijectivity and normalizes. Throws InvalidPatch or NotBijective.
  static TranslationPresentation from_atom(const MapAtom& atom);
  static TranslationPresentation translation(Integer shift);

  const Integer& tail_up() const { return shift_; }
  const Integer& tail_down() const { return shift_; }
  const Integer& shift() const { return shift_; }
  const std::map<Integer, Integer>& patch() const { return patch_; }
  std::optional<Integer> lo() const;
  std::optional<Integer> hi() const;
  bool is_identity() const { return shift_ == 0 && patch_.empty(); }

  Integer eval(const Integer& n) const;
  Integer eval_inverse(const Integer& n) const;

  TranslationPresentation inverse() const;
  // x -> outer(inner(x))
  static TranslationPresentation compose(const TranslationPresentation& outer,
                                         const TranslationPresentation& inner);

  bool operator==(const TranslationPresentation& other) const {
    return shift_ == other.shift_ && patch_ == other.patch_;
  }

 private:
  TranslationPresentation(Integer shift, std::map<Integer, Integer> patch);

  Integer shift_;
  std::map<Integer, Integer> patch_;
  std::map<Integer, Integer> inverse_patch_;
};

enum class Capability { FullAnalysis, EvalOnly };

class ValidatedBijection {
 public:
  struct Opaque {
    enum class Op { Inverse, Compose };
    Op op;
    std::shared_ptr<const ValidatedBijection> first;
    std::shared_ptr<const ValidatedBijection> second;  // inner map of a compose
  };
  using Canonical = std::variant<TranslationPresentation, PairedShiftPresentation, Opaque>;

  explicit ValidatedBijection(Canonical canonical);

  Capability capability() const;
  const Canonical& canonical() const { return canonical_; }
  const TranslationPresentation* family_a() const;
  const PairedShiftPresentation* family_b() const;

  Integer eval(const Integer& n) const;
  Integer eval_inverse(const Integer& n) const;

 private:
  Canonical canonical_;
};

// Grammar (whitespace-insensitive, '#' starts a comment):
//   spec    := mapSpec | "paired_shift" | "paired_shift_inv"
//            | "inverse" "(" spec ")" | "compose" "(" spec "," spec ")"
//   mapSpec := "map" "{" "tail+" "=" int ";" "tail-" "=" int ";"
//              "patch" "{" [pair ("," pair)*] "}" "}"
//   pair    := int "->" int
// Throws SyntaxError.
ExprPtr parse(std::string_view text);

// Throws InvalidPatch or NotBijective.
ValidatedBijection validate(const BijectionExpr& expr);

inline ValidatedBijection load(std::string_view text) { return validate(*parse(text)); }

// DSL text for a canonical form; parse(format(f)) validates back to f.
std::string format(const ValidatedBijection& f);

// The fixed pairing Z -> Z x Z: zig-zag Z <-> N on each side of the Cantor
// pairing N x N <-> N.
std::pair<Integer, Integer> pair(const Integer& m);
Integer unpair(const Integer& i, const Integer& k);

// Zig-zag enumeration N -> Z: 0, 1, -1, 2, -2, ...
Integer zigzag(const Integer& n);
Integer unzigzag(const Integer& m);

}  // namespace potmono::presentation
