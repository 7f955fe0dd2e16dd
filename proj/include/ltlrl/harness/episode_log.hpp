#pragma once

#include <ostream>

#include "json.hpp"
#include "ltlrl/rl/engine.hpp"

namespace ltlrl::harness {

// One JSON object per line. Step records carry i, k, action, L, phi, r and
// delta; each episode is closed by {"i": ..., "end": ...} with "penalized"
// naming the step that took a dead-end penalty.
nlohmann::json step_record(std::size_t episode, const rl::StepRecord& step);
nlohmann::json end_record(const rl::EpisodeLog& log);

void write_episode(std::ostream& out, const rl::EpisodeLog& log);

}  // namespace ltlrl::harness
