#include "ltlrl/rl/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ltlrl::rl {

std::vector<double> policy_distribution(const QStore& store, std::span<const Decision> candidates,
                                        double temperature, double epsilon) {
  if (candidates.empty()) throw std::invalid_argument("policy: no candidate actions");
  if (!(temperature > 0)) throw std::invalid_argument("policy: temperature must be positive");
  if (!(epsilon >= 0 && epsilon <= 1)) throw std::invalid_argument("policy: epsilon must be in [0, 1]");

  std::vector<double> p(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    p[i] = (store.q1(candidates[i]) + store.q2(candidates[i])) / (2 * temperature);
  const double top = *std::max_element(p.begin(), p.end());
  double total = 0;
  for (auto& v : p) {
    v = std::exp(v - top);
    total += v;
  }
  const double uniform = 1.0 / static_cast<double>(candidates.size());
  for (auto& v : p) v = (1 - epsilon) * (v / total) + epsilon * uniform;
  return p;
}

std::size_t sample_index(std::span<const double> probabilities, util::Rng& rng) {
  double u = rng.uniform();
  for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
    if (u < probabilities[i]) return i;
    u -= probabilities[i];
  }
  return probabilities.size() - 1;
}

std::size_t decide_next_action(const QStore& store, std::span<const Decision> candidates,
                               double temperature, double epsilon, util::Rng& rng) {
  const auto p = policy_distribution(store, candidates, temperature, epsilon);
  return sample_index(p, rng);
}

}  // namespace ltlrl::rl
