#pragma once

#include <cstddef>
#include <span>

#include "ltlrl/ltl/atom.hpp"
#include "ltlrl/ltl/formula.hpp"

namespace ltlrl::ltl {

/// Pointwise finite-trace satisfaction (t, k) |= f, computed directly by
/// recursion on the formula. Each trace entry is the union of the action and
/// state labelings of one position.
///
/// Positions at or past the end of the trace carry no labels: atoms are false
/// there, `true` is true, and an Until is false because its witness must lie
/// inside the trace.
bool evaluate(std::span<const Labeling> trace, std::size_t k, const Formula& f);

}  // namespace ltlrl::ltl
