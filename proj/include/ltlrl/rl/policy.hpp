#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ltlrl/rl/qstore.hpp"
#include "ltlrl/util/random.hpp"

namespace ltlrl::rl {

/// Action distribution of the epsilon-greedy softmax policy:
///
///   P(d) = (1 - eps) * softmax((Q1(d) + Q2(d)) / 2T) + eps / |candidates|
///
/// The softmax subtracts the maximum exponent before exponentiating.
/// Throws std::invalid_argument on an empty candidate list, T <= 0, or eps
/// outside [0, 1].
std::vector<double> policy_distribution(const QStore& store, std::span<const Decision> candidates,
                                        double temperature, double epsilon);

/// Samples an index into `candidates` from policy_distribution().
std::size_t decide_next_action(const QStore& store, std::span<const Decision> candidates,
                               double temperature, double epsilon, util::Rng& rng);

/// Samples from an arbitrary discrete distribution.
std::size_t sample_index(std::span<const double> probabilities, util::Rng& rng);

}  // namespace ltlrl::rl
