#include "ltlrl/rl/config.hpp"

#include <algorithm>
#include <string>

namespace ltlrl::rl {

namespace {

void require(bool ok, const char* field, const char* rule) {
  if (!ok) throw ConfigError(std::string(field) + " must be " + rule);
}

}  // namespace

void LearnerConfig::validate() const {
  require(max_steps >= 1, "steps (K)", ">= 1");
  require(temperature0 > 0, "T0", "positive");
  require(temperature_step > 0, "deltaT", "positive");
  require(temperature_min > 0, "Tmin", "positive");
  require(epsilon0 > 0 && epsilon0 <= 1, "eps0", "in (0, 1]");
  require(epsilon_decay > 0 && epsilon_decay <= 1, "epsU", "in (0, 1]");
  require(epsilon_min > 0 && epsilon_min <= 1, "epsMin", "in (0, 1]");
  require(eta0 > 0, "eta0", "positive");
  require(eta_decay > 0 && eta_decay <= 1, "etaU", "in (0, 1]");
  require(eta_min > 0, "etaMin", "positive");
  require(lambda >= 0 && lambda <= 1, "lambda", "in [0, 1]");
  require(alpha >= 0 && alpha <= 1, "alpha", "in [0, 1]");
  require(rho > 0, "rho", "positive");
  require(eligibility_min > 0, "eMin", "positive");
}

void Schedule::anneal(const LearnerConfig& c) {
  temperature = std::max(temperature - c.temperature_step, c.temperature_min);
  epsilon = std::max(c.epsilon_decay * epsilon, c.epsilon_min);
  eta = std::max(c.eta_decay * eta, c.eta_min);
}

}  // namespace ltlrl::rl
