#pragma once

#include <cstdint>
#include <vector>

#include "chaosmab/rng.hpp"

namespace chaosmab {

// Per-arm pull/reward statistics shared by the reference algorithms. Rewards
// are Bernoulli, so the reward sum and sum of squares both equal the win
// count; they are exposed separately because the UCB1-tuned variance term is
// written in terms of them.
class ArmStats {
 public:
  explicit ArmStats(int n_arms);

  void record(int arm, bool hit);

  int n_arms() const noexcept { return static_cast<int>(pulls_.size()); }
  std::int64_t pulls(int arm) const { return pulls_[static_cast<std::size_t>(arm)]; }
  std::int64_t wins(int arm) const { return wins_[static_cast<std::size_t>(arm)]; }
  double reward_sum(int arm) const { return static_cast<double>(wins(arm)); }
  double reward_sum_squares(int arm) const { return static_cast<double>(wins(arm)); }
  double mean(int arm) const {
    return pulls(arm) > 0 ? reward_sum(arm) / static_cast<double>(pulls(arm)) : 0.0;
  }
  std::int64_t total_pulls() const noexcept { return total_; }

 private:
  std::vector<std::int64_t> pulls_;
  std::vector<std::int64_t> wins_;
  std::int64_t total_ = 0;
};

// Thompson sampling with a uniform Beta(1, 1) prior: draw
// theta_i ~ Beta(wins_i + 1, losses_i + 1) and take the argmax.
int thompson_select(const ArmStats& stats, Xoshiro256& rng);

// UCB1-tuned (Auer, Cesa-Bianchi & Fischer 2002). While any arm is unplayed,
// one of the unplayed arms is chosen uniformly at random; afterwards the
// index is
//   mean_i + sqrt(ln(t) / n_i * min(1/4, V_i)),
//   V_i = sample variance + sqrt(2 ln(t) / n_i),
// with t the total number of plays so far. Ties broken uniformly.
int ucb1tuned_select(const ArmStats& stats, std::int64_t total_plays, Xoshiro256& rng);

}  // namespace chaosmab
