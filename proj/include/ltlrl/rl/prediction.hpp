#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ltlrl/env/model.hpp"
#include "ltlrl/ltl/atom.hpp"
#include "ltlrl/ltl/formula.hpp"
#include "ltlrl/rl/qstore.hpp"

namespace ltlrl::rl {

/// Outcome of inspecting the enabled actions' labels before choosing one.
struct Prediction {
  enum class Kind {
    Satisfied,        // `satisfied` alone already makes the formula true
    DeadEndPrevious,  // every action falsifies the formula
    Continue,         // choose among `survivors`
  };

  Kind kind = Kind::Continue;
  std::size_t satisfied = 0;           // index into the enabled list
  std::vector<std::size_t> survivors;  // indices of actions not known to falsify
  std::vector<Decision> decisions;     // survivors keyed by the current tail
};

/// For each enabled action, progresses `formula` with only its action labels
/// resolved. Actions that yield !true are pruned; the first one that yields
/// true, if any, is reported as Satisfied.
Prediction prune_and_predict(const ltl::Formula& formula, const Tail& tail,
                             std::span<const env::GuiAction> enabled,
                             std::span<const ltl::AtomicProposition> alphabet);

}  // namespace ltlrl::rl
