#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ltlrl/ltl/atom.hpp"

namespace ltlrl::ltl {

enum class Op : std::uint8_t { True, Atom, Not, And, Next, Until };

// Immutable LTL formula over the core connectives. Nodes are shared, so
// copies are cheap and values can be handed across threads freely. Derived
// operators (false, |, ->, F, G) exist only as parser sugar.
class Formula {
 public:
  static Formula top();
  static Formula bottom();  // !true
  static Formula atom(AtomicProposition p);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula next(Formula f);
  static Formula until(Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Only valid for Op::Atom.
  const AtomicProposition& proposition() const;
  /// Operand of Not/Next, left operand of And/Until.
  const Formula& lhs() const;
  /// Right operand of And/Until.
  const Formula& rhs() const;

  bool is_true() const noexcept { return op() == Op::True; }
  bool is_false() const noexcept;

  std::size_t hash() const noexcept;
  /// Number of Not/And/Next/Until nodes.
  std::size_t operator_count() const noexcept;

  /// Renders in the textual grammar accepted by parse(); `!true` for false.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Verdict of one progression step. Undetermined never carries true/!true.
class Verdict {
 public:
  enum class Kind { True, False, Undetermined };

  /// Classifies an already simplified residual formula.
  static Verdict of(Formula residual);

  Kind kind() const noexcept { return kind_; }
  bool is_true() const noexcept { return kind_ == Kind::True; }
  bool is_false() const noexcept { return kind_ == Kind::False; }
  bool is_undetermined() const noexcept { return kind_ == Kind::Undetermined; }
  /// The residual obligation; `true` / `!true` for the decided kinds.
  const Formula& formula() const noexcept { return formula_; }

  std::string to_string() const;

 private:
  Verdict(Kind kind, Formula f) : kind_(kind), formula_(std::move(f)) {}
  Kind kind_;
  Formula formula_;
};

}  // namespace ltlrl::ltl

template <>
struct std::hash<ltlrl::ltl::Formula> {
  std::size_t operator()(const ltlrl::ltl::Formula& f) const noexcept { return f.hash(); }
};
