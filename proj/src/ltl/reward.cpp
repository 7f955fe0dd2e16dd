#include "ltlrl/ltl/reward.hpp"

#include "ltlrl/ltl/progression.hpp"

namespace ltlrl::ltl {

double shaped_reward(const Formula& current, const Verdict& next, bool shaping_enabled) {
  if (next.is_true()) return 1.0;
  if (next.is_false()) return -1.0;
  if (!shaping_enabled) return 0.0;
  const auto before = static_cast<double>(count_atoms(current));
  const auto after = static_cast<double>(count_atoms(next.formula()));
  if (after == 0.0) return 0.0;
  const double diff = after > before ? after - before : before - after;
  return diff / (after + before);
}

}  // namespace ltlrl::ltl
