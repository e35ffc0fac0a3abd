#pragma once

#include <cstdint>
#include <vector>

#include "chaosmab/rng.hpp"

namespace chaosmab {

// The benchmark's fixed hit-probability pattern: P1=0.7, P2=0.5, P3=0.9,
// P4=0.1, then alternating 0.7/0.5 pairs. Arm 3 is the unique best arm.
// Defined pairwise, so n_arms must be even and at least 4.
std::vector<double> standard_probabilities(int n_arms);

// Stationary Bernoulli bandit with a private seeded stream. One env per
// cycle; reward sequences are reproducible bit-for-bit given (seed, arms).
class BanditEnv {
 public:
  BanditEnv(std::vector<double> probabilities, std::uint64_t seed);

  // One Bernoulli draw for a 0-based arm index.
  bool play(int arm);

  int n_arms() const noexcept { return static_cast<int>(probs_.size()); }
  int best_arm() const noexcept { return best_; }
  double p_max() const noexcept { return probs_[static_cast<std::size_t>(best_)]; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
  int best_;
  Xoshiro256 rng_;
};

}  // namespace chaosmab
