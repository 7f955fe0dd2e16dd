#pragma once

#include "ltlrl/ltl/formula.hpp"

namespace ltlrl::ltl {

/// Immediate reward for progressing `current` into `next`.
///
/// 1 on a True verdict, -1 on False. Otherwise, with shaping enabled, the
/// atom-count distance |N(next) - N(current)| / (N(next) + N(current)).
/// An undetermined residual without atoms yields 0: there is no count left
/// to measure progress against, and the value must stay below 1.
double shaped_reward(const Formula& current, const Verdict& next, bool shaping_enabled);

}  // namespace ltlrl::ltl
