#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace ltlrl::rl {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hyperparameters of the learner. The defaults are tuning choices that work
/// on desk-scale models, not published values.
struct LearnerConfig {
  std::size_t max_episodes = 500;  // E; 0 stops before the first episode
  std::size_t max_steps = 4;       // K

  double temperature0 = 5.0;        // T0
  double temperature_step = 0.05;   // deltaT
  double temperature_min = 0.5;     // Tmin
  double epsilon0 = 0.2;
  double epsilon_decay = 0.99;      // epsU
  double epsilon_min = 0.01;
  double eta0 = 1.0;                // learning rate
  double eta_decay = 0.999;         // etaU
  double eta_min = 0.1;

  double lambda = 0.9;              // eligibility discount
  double alpha = 0.5;               // doubleness ratio
  double rho = 1.0;                 // vigilance bound on |Q|
  double eligibility_min = 0.01;    // eMin
  std::size_t tail_length = 2;      // h

  bool reward_shaping = true;       // RS
  bool reward_prediction = true;    // prune actions by their labels before deciding

  std::uint64_t seed = 0;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// Temperature, exploration rate and learning rate, annealed after each episode.
struct Schedule {
  double temperature;
  double epsilon;
  double eta;

  static Schedule initial(const LearnerConfig& c) {
    return {c.temperature0, c.epsilon0, c.eta0};
  }
  void anneal(const LearnerConfig& c);
};

}  // namespace ltlrl::rl
