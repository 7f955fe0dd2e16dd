#pragma once

#include <span>

#include "ltlrl/env/model.hpp"
#include "ltlrl/ltl/atom.hpp"

namespace ltlrl::env {

// State keys: "activity" and any other attribute name match the attribute
// value; "text" and "objectID" match if any widget matches; "checked" matches
// the flag of the first checkable widget. Action-scope atoms are ignored.
ltl::Labeling state_labeling(const GuiState& state,
                             std::span<const ltl::AtomicProposition> alphabet);

// Action keys: "actionType" (type), "actionDetail" (target widget text),
// "actionObjectID" (target widget object id). State-scope atoms are ignored.
ltl::Labeling action_labeling(const GuiAction& action,
                              std::span<const ltl::AtomicProposition> alphabet);

}  // namespace ltlrl::env
