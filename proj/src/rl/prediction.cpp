#include "ltlrl/rl/prediction.hpp"

#include <optional>

#include "ltlrl/env/labeling.hpp"
#include "ltlrl/ltl/progression.hpp"

namespace ltlrl::rl {

Prediction prune_and_predict(const ltl::Formula& formula, const Tail& tail,
                             std::span<const env::GuiAction> enabled,
                             std::span<const ltl::AtomicProposition> alphabet) {
  Prediction out;
  std::optional<std::size_t> satisfying;
  for (std::size_t i = 0; i < enabled.size(); ++i) {
    const ltl::Formula residual = ltl::predict(formula, env::action_labeling(enabled[i], alphabet));
    if (residual.is_false()) continue;
    if (residual.is_true() && !satisfying) satisfying = i;
    out.survivors.push_back(i);
    out.decisions.push_back({tail, enabled[i].signature()});
  }
  if (out.survivors.empty()) {
    out.kind = Prediction::Kind::DeadEndPrevious;
  } else if (satisfying) {
    out.kind = Prediction::Kind::Satisfied;
    out.satisfied = *satisfying;
  }
  return out;
}

}  // namespace ltlrl::rl
