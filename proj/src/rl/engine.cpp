#include "ltlrl/rl/engine.hpp"

#include <chrono>
#include <stdexcept>

#include "ltlrl/env/labeling.hpp"
#include "ltlrl/ltl/progression.hpp"
#include "ltlrl/ltl/reward.hpp"
#include "ltlrl/rl/policy.hpp"
#include "ltlrl/rl/prediction.hpp"

namespace ltlrl::rl {

const char* to_string(EngineKind kind) {
  return kind == EngineKind::Farlead ? "farlead" : "random";
}

const char* to_string(Outcome outcome) {
  return outcome == Outcome::Satisfied ? "satisfied" : "exhausted";
}

const char* to_string(EpisodeEnd end) {
  switch (end) {
    case EpisodeEnd::Satisfied:
      return "satisfied";
    case EpisodeEnd::Violated:
      return "violated";
    case EpisodeEnd::DeadEnd:
      return "dead-end";
    case EpisodeEnd::StepLimit:
      return "step-limit";
  }
  return "?";
}

RngStreams RngStreams::from_seed(std::uint64_t seed) {
  util::SeedSequence seq(seed);
  const auto policy = seq.next();
  const auto swap = seq.next();
  const auto env = seq.next();
  return {util::Rng(policy), util::Rng(swap), env};
}

namespace {

std::size_t find_forced(const std::vector<env::GuiAction>& enabled, const std::string& wanted,
                        const env::GuiState& where) {
  for (std::size_t i = 0; i < enabled.size(); ++i)
    if (enabled[i].display() == wanted || enabled[i].signature() == wanted) return i;
  throw env::ActionNotEnabled("scripted action '" + wanted + "' is not enabled in " +
                              (where.is_dont_care() ? std::string("the don't-care state")
                                                    : "'" + where.id + "'"));
}

}  // namespace

EpisodeLog run_episode(EpisodeContext& ctx, EngineKind kind, std::size_t episode,
                       std::span<const std::string> forced) {
  const bool learning = kind == EngineKind::Farlead;
  const bool scripted = !forced.empty();
  const auto& config = ctx.config;

  EpisodeLog log;
  log.episode = episode;
  ctx.env.reset();
  ctx.store.clear_eligibility();

  ltl::Formula formula = ctx.formula;
  Tail tail;
  struct Previous {
    Decision decision;
    ltl::Labeling action_labels;
  };
  std::optional<Previous> previous;

  for (std::size_t k = 0; k < config.max_steps; ++k) {
    if (scripted && k >= forced.size()) break;
    const auto& enabled = ctx.env.enabled_actions();
    if (enabled.empty()) throw env::ModelError("state '" + ctx.env.current().id + "' has no actions");

    std::size_t chosen = 0;
    bool predicted = false;
    if (scripted) {
      chosen = find_forced(enabled, forced[k], ctx.env.current());
    } else if (kind == EngineKind::Random) {
      chosen = ctx.rng.policy.index(enabled.size());
    } else {
      std::vector<std::size_t> indices;
      std::vector<Decision> decisions;
      if (config.reward_prediction) {
        Prediction p = prune_and_predict(formula, tail, enabled, ctx.alphabet);
        if (p.kind == Prediction::Kind::DeadEndPrevious) {
          if (previous) {
            ctx.store.learn(previous->decision, previous->action_labels, -1.0, config,
                            ctx.schedule.eta, ctx.rng.swap, false);
            log.penalized_step = k - 1;
          }
          log.end = EpisodeEnd::DeadEnd;
          return log;
        }
        if (p.kind == Prediction::Kind::Satisfied) {
          chosen = p.satisfied;
          predicted = true;
        }
        indices = std::move(p.survivors);
        decisions = std::move(p.decisions);
      } else {
        for (std::size_t i = 0; i < enabled.size(); ++i) {
          indices.push_back(i);
          decisions.push_back({tail, enabled[i].signature()});
        }
      }
      if (!predicted)
        chosen = indices[decide_next_action(ctx.store, decisions, ctx.schedule.temperature,
                                            ctx.schedule.epsilon, ctx.rng.policy)];
    }

    const env::GuiAction action = enabled[chosen];
    Decision decision{tail, action.signature()};
    const bool new_state = !ctx.store.knows_tail(tail);
    const ltl::Labeling action_labels = env::action_labeling(action, ctx.alphabet);

    const env::GuiState& state = ctx.env.execute(action);
    ltl::Labeling labels = action_labels;
    labels.merge(env::state_labeling(state, ctx.alphabet));

    const ltl::Verdict verdict = ltl::projection(formula, labels);
    const double reward = ltl::shaped_reward(formula, verdict, config.reward_shaping);

    double delta = 0.0;
    if (learning)
      delta = ctx.store
                  .learn(decision, action_labels, reward, config, ctx.schedule.eta, ctx.rng.swap,
                         new_state)
                  .delta;

    log.steps.push_back({k, action.display(), labels, verdict.formula(), reward, delta, predicted});
    log.actions.push_back(action);

    if (verdict.is_true()) {
      log.end = EpisodeEnd::Satisfied;
      return log;
    }
    if (verdict.is_false()) {
      log.end = EpisodeEnd::Violated;
      return log;
    }
    formula = verdict.formula();
    tail.push(decision.action, state.id, config.tail_length);
    previous = Previous{std::move(decision), action_labels};
  }
  log.end = EpisodeEnd::StepLimit;
  return log;
}

GenerationResult generate(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                          const LearnerConfig& config, EngineKind kind,
                          const EpisodeObserver& observer) {
  config.validate();
  if (!model) throw std::invalid_argument("generate: no model");
  const auto started = std::chrono::steady_clock::now();

  RngStreams rng = RngStreams::from_seed(config.seed);
  env::EnvSession session(model, rng.env_seed);
  QStore store;
  Schedule schedule = Schedule::initial(config);
  const auto alphabet = ltl::atoms_of(formula);
  EpisodeContext ctx{session, formula, alphabet, store, config, schedule, rng};

  GenerationResult result;
  result.stats.seed = config.seed;
  for (std::size_t i = 1; i <= config.max_episodes; ++i) {
    EpisodeLog log = run_episode(ctx, kind, i);
    result.stats.episodes = i;
    result.stats.steps += log.steps.size();
    if (observer) observer(log);
    if (log.end == EpisodeEnd::Satisfied) {
      result.stats.outcome = Outcome::Satisfied;
      result.test = std::move(log.actions);
      break;
    }
    schedule.anneal(config);
  }

  result.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

GenerationResult random_policy_generate(std::shared_ptr<const env::AppModel> model,
                                        const ltl::Formula& formula, const LearnerConfig& config,
                                        const EpisodeObserver& observer) {
  return generate(std::move(model), formula, config, EngineKind::Random, observer);
}

}  // namespace ltlrl::rl
