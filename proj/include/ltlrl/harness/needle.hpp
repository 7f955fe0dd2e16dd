#pragma once

#include <string>

#include "json.hpp"

namespace ltlrl::harness {

// A chain Home -> PageA -> PageB -> ... -> Goal in which each page offers one
// correct click among `decoys` wrong ones plus text, back, pauseresume and
// idle. Wrong clicks lead to a decoy screen. Reinitialize followed by the
// correct clicks is the only way to reach Goal within depth + 1 steps.
struct NeedleShape {
  int depth = 3;   // correct clicks between Home and Goal
  int decoys = 6;  // wrong clicks per page
};

nlohmann::json needle_model(const NeedleShape& shape = {});

/// The needle formula at detail level 'a' (state labels only), 'b'
/// (plus action types) or 'c' (plus action details).
std::string needle_formula(char level, const NeedleShape& shape = {});

/// Widget text of the correct click on page `i` (0 is Home).
std::string needle_label(int i);

}  // namespace ltlrl::harness
