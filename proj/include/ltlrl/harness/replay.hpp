#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ltlrl/env/model.hpp"
#include "ltlrl/harness/test_file.hpp"
#include "ltlrl/ltl/formula.hpp"
#include "ltlrl/rl/engine.hpp"

namespace ltlrl::harness {

struct ReplayResult {
  std::vector<rl::StepRecord> steps;
  ltl::Verdict::Kind verdict = ltl::Verdict::Kind::Undetermined;
  /// Actions left unexecuted because the formula was decided earlier.
  std::size_t skipped = 0;

  bool satisfied() const noexcept { return verdict == ltl::Verdict::Kind::True; }
};

/// Executes `test` from the don't-care state, progressing `formula` after each
/// action. Stops early once the formula is decided. Throws
/// env::ActionNotEnabled when the model no longer offers a scripted action.
ReplayResult replay(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                    const std::vector<ActionRecord>& test, std::uint64_t seed = 0,
                    bool reward_shaping = true);

struct Reliability {
  std::size_t runs = 0;
  std::size_t satisfied = 0;

  double rate() const noexcept { return runs == 0 ? 0.0 : double(satisfied) / double(runs); }
};

/// Replays `times` runs with seeds seed, seed+1, ...
Reliability replay_many(std::shared_ptr<const env::AppModel> model, const ltl::Formula& formula,
                        const std::vector<ActionRecord>& test, std::size_t times,
                        std::uint64_t seed = 0);

}  // namespace ltlrl::harness
