#include "ltlrl/env/session.hpp"

#include <algorithm>

namespace ltlrl::env {

EnvSession::EnvSession(std::shared_ptr<const AppModel> model, std::uint64_t seed)
    : model_(std::move(model)), current_(&model_->dont_care()), rng_(seed) {}

void EnvSession::reset() noexcept { current_ = &model_->dont_care(); }

const std::vector<GuiAction>& EnvSession::enabled_actions() const {
  return model_->enabled_actions(*current_);
}

const GuiState& EnvSession::execute(const GuiAction& action) {
  const auto& declared = current_->actions;
  const std::string sig = action.signature();
  auto it = std::lower_bound(declared.begin(), declared.end(), sig,
                             [](const DeclaredAction& d, const std::string& s) {
                               return d.action.signature() < s;
                             });
  if (it == declared.end() || it->action.signature() != sig) {
    const std::string where = current_->is_dont_care() ? "the don't-care state" : "'" + current_->id + "'";
    throw ActionNotEnabled("action '" + sig + "' is not enabled in " + where);
  }
  if (it->outcomes.empty()) throw ModelError("action '" + sig + "' has no transition");

  std::size_t target = it->outcomes.back().target;
  if (it->outcomes.size() > 1) {
    double u = rng_.uniform();
    for (const auto& t : it->outcomes) {
      if (u < t.weight) {
        target = t.target;
        break;
      }
      u -= t.weight;
    }
  }
  current_ = &model_->state(target);
  ++steps_;
  return *current_;
}

}  // namespace ltlrl::env
