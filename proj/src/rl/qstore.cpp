#include "ltlrl/rl/qstore.hpp"

#include <algorithm>
#include <utility>

namespace ltlrl::rl {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

void Tail::push(std::string action, std::string state, std::size_t max_length) {
  if (max_length == 0) {
    steps_.clear();
    return;
  }
  steps_.push_back({std::move(action), std::move(state)});
  if (steps_.size() > max_length)
    steps_.erase(steps_.begin(), steps_.begin() + static_cast<long>(steps_.size() - max_length));
}

std::size_t Tail::hash() const noexcept {
  std::size_t h = steps_.size();
  std::hash<std::string> hs;
  for (const auto& s : steps_) h = mix(mix(h, hs(s.action)), hs(s.state));
  return h;
}

std::size_t Decision::hash() const noexcept {
  return mix(tail.hash(), std::hash<std::string>{}(action));
}

double QStore::eligibility(const Decision& d) const {
  auto it = elig_.find(d);
  return it == elig_.end() ? 0.0 : it->second.value;
}

std::vector<double> QStore::all_values() const {
  std::vector<double> out;
  for (const auto* m : {&q1_, &q2_})
    for (const auto& [_, v] : *m) out.push_back(v);
  for (const auto* m : {&label_q1_, &label_q2_})
    for (const auto& [_, v] : *m) out.push_back(v);
  return out;
}

LearnStep QStore::learn(const Decision& d, const ltl::Labeling& action_labels, double reward,
                        const LearnerConfig& config, double eta, util::Rng& rng,
                        bool new_state) {
  const double rho = config.rho;
  const double alpha = config.alpha;
  auto clamp = [rho](double v) { return std::clamp(v, -rho, rho); };

  if (new_state) q1_[d] = lookup(label_q1_, action_labels);
  seen_tails_.insert(d.tail);

  const double delta = reward - lookup(q1_, d);
  auto& trace = elig_[d];
  trace.value += 1.0;
  trace.action_labels = action_labels;

  for (auto it = elig_.begin(); it != elig_.end();) {
    auto& [decision, e] = *it;
    if (e.value >= config.eligibility_min) {
      const double step = eta * delta * e.value;

      double& la1 = label_q1_[e.action_labels];
      la1 = clamp(la1 + step);
      double& la2 = label_q2_[e.action_labels];
      la2 = (1 - alpha) * la1 + alpha * la2;

      double& v1 = q1_[decision];
      v1 = clamp(v1 + step);
      double& v2 = q2_[decision];
      v2 = (1 - alpha) * v1 + alpha * v2;

      e.value *= config.lambda;
    }
    if (e.value < config.eligibility_min)
      it = elig_.erase(it);
    else
      ++it;
  }

  const bool swapped = rng.coin();
  if (swapped) {
    std::swap(q1_, q2_);
    std::swap(label_q1_, label_q2_);
  }
  return {delta, swapped};
}

}  // namespace ltlrl::rl
