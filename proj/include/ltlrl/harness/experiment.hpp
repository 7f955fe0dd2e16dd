#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ltlrl/env/model.hpp"
#include "ltlrl/ltl/formula.hpp"
#include "ltlrl/rl/config.hpp"
#include "ltlrl/rl/engine.hpp"

namespace ltlrl::harness {

struct ExperimentSpec {
  rl::EngineKind engine = rl::EngineKind::Farlead;
  rl::LearnerConfig config;  // config.seed is ignored; run i uses seed_base + i
  std::size_t repetitions = 100;
  std::uint64_t seed_base = 0;
  std::size_t threads = 1;  // 0 picks the hardware concurrency
};

/// Runs the repetitions, possibly in parallel. Results are indexed by
/// repetition regardless of completion order.
std::vector<rl::RunStats> run_experiment(std::shared_ptr<const env::AppModel> model,
                                         const ltl::Formula& formula, const ExperimentSpec& spec);

struct Summary {
  std::size_t reps = 0;
  std::size_t failures = 0;
  double mean_steps = 0;
  std::size_t median_steps = 0;  // lower median
  std::size_t max_steps = 0;
  double mean_wall_ms = 0;
  double max_wall_ms = 0;
};

Summary summarize(const std::vector<rl::RunStats>& runs);

/// Header `rep,seed,outcome,episodes,steps,wallTimeMs`. Without wall time the
/// last column is written as 0 so that reruns compare byte for byte.
void write_csv(std::ostream& out, const std::vector<rl::RunStats>& runs, bool wall_time = true);
std::vector<rl::RunStats> read_csv(std::istream& in);

void write_summary(std::ostream& out, const Summary& s);

}  // namespace ltlrl::harness
