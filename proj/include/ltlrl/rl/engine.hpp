#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltlrl/env/model.hpp"
#include "ltlrl/env/session.hpp"
#include "ltlrl/ltl/atom.hpp"
#include "ltlrl/ltl/formula.hpp"
#include "ltlrl/rl/config.hpp"
#include "ltlrl/rl/qstore.hpp"
#include "ltlrl/util/random.hpp"

namespace ltlrl::rl {

enum class EngineKind { Farlead, Random };

enum class Outcome { Satisfied, Exhausted };

enum class EpisodeEnd { Satisfied, Violated, DeadEnd, StepLimit };

const char* to_string(EngineKind kind);
const char* to_string(Outcome outcome);
const char* to_string(EpisodeEnd end);

struct StepRecord {
  std::size_t k;
  std::string action;      // display form, e.g. "click 239 669"
  ltl::Labeling labels;    // action and state labels of this position
  ltl::Formula formula;    // obligation after this step
  double reward;
  double delta;            // update value; 0 when nothing was learned
  bool predicted = false;  // chosen because its labels alone satisfy the formula
};

struct EpisodeLog {
  std::size_t episode = 0;
  std::vector<StepRecord> steps;
  std::vector<env::GuiAction> actions;
  EpisodeEnd end = EpisodeEnd::StepLimit;
  /// Step index that received the dead-end penalty, if any.
  std::optional<std::size_t> penalized_step;
};

struct RunStats {
  Outcome outcome = Outcome::Exhausted;
  std::size_t episodes = 0;
  std::size_t steps = 0;  // executed actions over all episodes
  double wall_ms = 0;
  std::uint64_t seed = 0;
};

struct GenerationResult {
  RunStats stats;
  std::vector<env::GuiAction> test;  // empty unless satisfied

  bool satisfied() const noexcept { return stats.outcome == Outcome::Satisfied; }
};

/// Independent random streams derived from one master seed.
struct RngStreams {
  util::Rng policy;
  util::Rng swap;
  std::uint64_t env_seed;

  static RngStreams from_seed(std::uint64_t seed);
};

/// Everything one episode needs. References must outlive the call.
struct EpisodeContext {
  env::EnvSession& env;
  const ltl::Formula& formula;
  std::span<const ltl::AtomicProposition> alphabet;
  QStore& store;
  const LearnerConfig& config;
  const Schedule& schedule;
  RngStreams& rng;
};

/// Runs one episode from the don't-care state until the formula is decided or
/// K steps have been taken. With `forced`, the k-th action is the enabled action
/// whose display or signature equals forced[k]; prediction is skipped and the
/// episode stops when the script runs out.
EpisodeLog run_episode(EpisodeContext& ctx, EngineKind kind, std::size_t episode,
                       std::span<const std::string> forced = {});

using EpisodeObserver = std::function<void(const EpisodeLog&)>;

/// Up to E episodes with annealing after each; stops at the first satisfying
/// episode. Deterministic for a given (model, formula, config).
GenerationResult generate(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                          const LearnerConfig& config, EngineKind kind = EngineKind::Farlead,
                          const EpisodeObserver& observer = {});

/// Uniform random exploration over the same action set; no learning or pruning.
GenerationResult random_policy_generate(std::shared_ptr<const env::AppModel> model,
                                        const ltl::Formula& formula, const LearnerConfig& config,
                                        const EpisodeObserver& observer = {});

}  // namespace ltlrl::rl
