#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltlrl::ltl {

/// Which side of an observation a proposition talks about.
enum class Scope { State, Action };

/// `key=value` is exact equality, `key~value` is substring containment.
enum class Match { Equals, Contains };

/// An atomic proposition over GUI observations, e.g. `[activity~Main]` or
/// `[actionType=back]`. Keys starting with "action" are action-scope; all
/// other keys are state-scope.
class AtomicProposition {
 public:
  /// Throws std::invalid_argument on an empty key or value.
  AtomicProposition(std::string key, Match match, std::string value);

  const std::string& key() const noexcept { return key_; }
  Match match() const noexcept { return match_; }
  const std::string& value() const noexcept { return value_; }
  Scope scope() const noexcept;

  /// True when `observed` satisfies the matcher.
  bool holds_on(std::string_view observed) const noexcept;

  /// Renders as `[key=value]` or `[key~value]`.
  std::string to_string() const;

  auto operator<=>(const AtomicProposition&) const = default;

 private:
  std::string key_;
  Match match_;
  std::string value_;
};

/// The set of atomic propositions observed true at one step.
class Labeling {
 public:
  using Set = std::set<AtomicProposition>;
  using const_iterator = Set::const_iterator;

  Labeling() = default;
  Labeling(std::initializer_list<AtomicProposition> atoms) : atoms_(atoms) {}

  void insert(const AtomicProposition& atom) { atoms_.insert(atom); }
  void merge(const Labeling& other);
  bool contains(const AtomicProposition& atom) const { return atoms_.count(atom) != 0; }

  Labeling state_part() const;
  Labeling action_part() const;

  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const_iterator begin() const { return atoms_.begin(); }
  const_iterator end() const { return atoms_.end(); }

  /// `{[a=b], [c~d]}`; `{}` when empty.
  std::string to_string() const;
  std::vector<std::string> to_strings() const;

  auto operator<=>(const Labeling&) const = default;
  bool operator==(const Labeling&) const = default;

 private:
  Set atoms_;
};

}  // namespace ltlrl::ltl
