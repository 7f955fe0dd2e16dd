#include "ltlrl/harness/episode_log.hpp"

namespace ltlrl::harness {

using nlohmann::json;

json step_record(std::size_t episode, const rl::StepRecord& step) {
  json j{{"i", episode},
         {"k", step.k},
         {"action", step.action},
         {"L", step.labels.to_strings()},
         {"phi", step.formula.to_string()},
         {"r", step.reward},
         {"delta", step.delta}};
  if (step.predicted) j["predicted"] = true;
  return j;
}

json end_record(const rl::EpisodeLog& log) {
  json j{{"i", log.episode}, {"end", rl::to_string(log.end)}};
  if (log.penalized_step) j["penalized"] = *log.penalized_step;
  return j;
}

void write_episode(std::ostream& out, const rl::EpisodeLog& log) {
  for (const auto& s : log.steps) out << step_record(log.episode, s).dump() << '\n';
  out << end_record(log).dump() << '\n';
}

}  // namespace ltlrl::harness
