#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ltlrl/ltl/atom.hpp"
#include "ltlrl/rl/config.hpp"
#include "ltlrl/util/random.hpp"

namespace ltlrl::rl {

/// The most recent (action signature, state id) pairs of the current trace,
/// oldest first. Plays the role of the RL state.
class Tail {
 public:
  struct Step {
    std::string action;
    std::string state;
    auto operator<=>(const Step&) const = default;
  };

  /// Appends a step and drops the oldest ones beyond `max_length`.
  void push(std::string action, std::string state, std::size_t max_length);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::size_t hash() const noexcept;

  auto operator<=>(const Tail&) const = default;

 private:
  std::vector<Step> steps_;
};

/// A (tail, action signature) pair; the key of all Q-tables.
struct Decision {
  Tail tail;
  std::string action;

  std::size_t hash() const noexcept;
  auto operator<=>(const Decision&) const = default;
};

}  // namespace ltlrl::rl

template <>
struct std::hash<ltlrl::rl::Tail> {
  std::size_t operator()(const ltlrl::rl::Tail& t) const noexcept { return t.hash(); }
};
template <>
struct std::hash<ltlrl::rl::Decision> {
  std::size_t operator()(const ltlrl::rl::Decision& d) const noexcept { return d.hash(); }
};

namespace ltlrl::rl {

/// Result of one learn() call, for logging.
struct LearnStep {
  double delta;   // reward - Q1(decision) before the update
  bool swapped;   // the two table pairs were exchanged
};

/// Double Q-tables over decisions, stateless Q-tables over action labelings,
/// and the per-episode eligibility trace. All tables default to zero.
class QStore {
 public:
  double q1(const Decision& d) const { return lookup(q1_, d); }
  double q2(const Decision& d) const { return lookup(q2_, d); }
  double label_q1(const ltl::Labeling& l) const { return lookup(label_q1_, l); }
  double label_q2(const ltl::Labeling& l) const { return lookup(label_q2_, l); }
  double eligibility(const Decision& d) const;

  /// True once some decision with this tail has been learned from.
  bool knows_tail(const Tail& t) const { return seen_tails_.count(t) != 0; }

  /// Number of decisions with a tracked eligibility value.
  std::size_t eligible_count() const noexcept { return elig_.size(); }

  /// Every Q-value currently stored, in no particular order.
  std::vector<double> all_values() const;

  void clear_eligibility() { elig_.clear(); }

  /// Myopic double-Q update with eligibility traces:
  ///
  ///   delta = r - Q1(d);  e(d) += 1
  ///   for every d' with e(d') >= eMin:
  ///     QA1(L(d')) = clamp(QA1 + eta*delta*e, -rho, rho);  QA2 = (1-alpha)QA1 + alpha QA2
  ///     Q1(d')     = clamp(Q1  + eta*delta*e, -rho, rho);  Q2  = (1-alpha)Q1  + alpha Q2
  ///     e(d') *= lambda
  ///   swap (Q1, Q2) and (QA1, QA2) with probability 1/2
  ///
  /// When `new_state` is set, Q1(d) is first seeded from QA1(action_labels).
  /// Entries whose eligibility decays below eMin are dropped.
  LearnStep learn(const Decision& d, const ltl::Labeling& action_labels, double reward,
                  const LearnerConfig& config, double eta, util::Rng& rng, bool new_state);

 private:
  template <typename Map, typename Key>
  static double lookup(const Map& m, const Key& k) {
    auto it = m.find(k);
    return it == m.end() ? 0.0 : it->second;
  }

  struct Trace {
    double value = 0.0;
    ltl::Labeling action_labels;
  };

  std::unordered_map<Decision, double> q1_, q2_;
  std::map<ltl::Labeling, double> label_q1_, label_q2_;
  std::map<Decision, Trace> elig_;
  std::unordered_set<Tail> seen_tails_;
};

}  // namespace ltlrl::rl
