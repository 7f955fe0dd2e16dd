#include "ltlrl/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ltlrl::harness {

std::vector<rl::RunStats> run_experiment(std::shared_ptr<const env::AppModel> model,
                                         const ltl::Formula& formula, const ExperimentSpec& spec) {
  if (spec.repetitions == 0) throw std::invalid_argument("repetitions must be at least 1");
  spec.config.validate();

  std::vector<rl::RunStats> results(spec.repetitions);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t rep = next.fetch_add(1);
      if (rep >= spec.repetitions) return;
      try {
        rl::LearnerConfig config = spec.config;
        config.seed = spec.seed_base + rep;
        results[rep] = rl::generate(model, formula, config, spec.engine).stats;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = spec.repetitions;
      }
    }
  };

  std::size_t threads = spec.threads == 0 ? std::thread::hardware_concurrency() : spec.threads;
  threads = std::clamp<std::size_t>(threads, 1, spec.repetitions);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

Summary summarize(const std::vector<rl::RunStats>& runs) {
  Summary s;
  s.reps = runs.size();
  if (runs.empty()) return s;
  std::vector<std::size_t> steps;
  for (const auto& r : runs) {
    if (r.outcome != rl::Outcome::Satisfied) ++s.failures;
    steps.push_back(r.steps);
    s.mean_steps += static_cast<double>(r.steps);
    s.mean_wall_ms += r.wall_ms;
    s.max_steps = std::max(s.max_steps, r.steps);
    s.max_wall_ms = std::max(s.max_wall_ms, r.wall_ms);
  }
  s.mean_steps /= static_cast<double>(runs.size());
  s.mean_wall_ms /= static_cast<double>(runs.size());
  std::sort(steps.begin(), steps.end());
  s.median_steps = steps[(steps.size() - 1) / 2];
  return s;
}

void write_csv(std::ostream& out, const std::vector<rl::RunStats>& runs, bool wall_time) {
  out << "rep,seed,outcome,episodes,steps,wallTimeMs\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    out << i << ',' << r.seed << ',' << rl::to_string(r.outcome) << ',' << r.episodes << ','
        << r.steps << ',';
    if (wall_time)
      out << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
    else
      out << 0;
    out << '\n';
  }
}

std::vector<rl::RunStats> read_csv(std::istream& in) {
  std::vector<rl::RunStats> runs;
  std::string line;
  if (!std::getline(in, line) || line != "rep,seed,outcome,episodes,steps,wallTimeMs")
    throw std::runtime_error("csv: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    if (cells.size() != 6) throw std::runtime_error("csv: expected 6 columns in '" + line + "'");
    rl::RunStats r;
    r.seed = std::stoull(cells[1]);
    if (cells[2] == "satisfied")
      r.outcome = rl::Outcome::Satisfied;
    else if (cells[2] == "exhausted")
      r.outcome = rl::Outcome::Exhausted;
    else
      throw std::runtime_error("csv: unknown outcome '" + cells[2] + "'");
    r.episodes = std::stoull(cells[3]);
    r.steps = std::stoull(cells[4]);
    r.wall_ms = std::stod(cells[5]);
    runs.push_back(r);
  }
  return runs;
}

void write_summary(std::ostream& out, const Summary& s) {
  out << "reps: " << s.reps << '\n'
      << "failures: " << s.failures << '\n'
      << "meanSteps: " << s.mean_steps << '\n'
      << "medianSteps: " << s.median_steps << '\n'
      << "maxSteps: " << s.max_steps << '\n'
      << std::fixed << std::setprecision(3) << "meanWallTimeMs: " << s.mean_wall_ms << '\n'
      << "maxWallTimeMs: " << s.max_wall_ms << '\n'
      << std::defaultfloat;
}

}  // namespace ltlrl::harness
