#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ltlrl/env/model.hpp"
#include "ltlrl/util/random.hpp"

namespace ltlrl::env {

/// The requested action is not enabled in the current state.
class ActionNotEnabled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One live run over a shared, immutable model. Not thread-safe; give each
/// episode loop its own session.
class EnvSession {
 public:
  EnvSession(std::shared_ptr<const AppModel> model, std::uint64_t seed);

  /// Back to the don't-care state.
  void reset() noexcept;

  const AppModel& model() const noexcept { return *model_; }
  const GuiState& current() const noexcept { return *current_; }
  bool at_dont_care() const noexcept { return current_->is_dont_care(); }
  std::size_t step_count() const noexcept { return steps_; }

  const std::vector<GuiAction>& enabled_actions() const;

  /// Samples a successor of (current, action) and moves there.
  const GuiState& execute(const GuiAction& action);

 private:
  std::shared_ptr<const AppModel> model_;
  const GuiState* current_;
  util::Rng rng_;
  std::size_t steps_ = 0;
};

}  // namespace ltlrl::env
