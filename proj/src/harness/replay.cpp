#include "ltlrl/harness/replay.hpp"

#include "ltlrl/ltl/progression.hpp"

namespace ltlrl::harness {

ReplayResult replay(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                    const std::vector<ActionRecord>& test, std::uint64_t seed,
                    bool reward_shaping) {
  ReplayResult out;
  if (test.empty()) return out;

  rl::LearnerConfig config;
  config.max_steps = test.size();
  config.reward_shaping = reward_shaping;
  config.seed = seed;

  std::vector<std::string> script;
  script.reserve(test.size());
  for (const auto& r : test) script.push_back(r.display());

  auto rng = rl::RngStreams::from_seed(seed);
  env::EnvSession session(std::move(model), rng.env_seed);
  rl::QStore store;
  const auto schedule = rl::Schedule::initial(config);
  const auto alphabet = ltl::atoms_of(formula);
  rl::EpisodeContext ctx{session, formula, alphabet, store, config, schedule, rng};

  rl::EpisodeLog log = rl::run_episode(ctx, rl::EngineKind::Random, 1, script);
  out.steps = std::move(log.steps);
  out.skipped = test.size() - out.steps.size();
  if (log.end == rl::EpisodeEnd::Satisfied)
    out.verdict = ltl::Verdict::Kind::True;
  else if (log.end == rl::EpisodeEnd::Violated)
    out.verdict = ltl::Verdict::Kind::False;
  return out;
}

Reliability replay_many(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                        const std::vector<ActionRecord>& test, std::size_t times,
                        std::uint64_t seed) {
  Reliability r;
  for (std::size_t i = 0; i < times; ++i) {
    ++r.runs;
    try {
      if (replay(model, formula, test, seed + i).satisfied()) ++r.satisfied;
    } catch (const env::ActionNotEnabled&) {
      // the run drifted off the scripted path
    }
  }
  return r;
}

}  // namespace ltlrl::harness
