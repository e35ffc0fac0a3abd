#include "chaosmab/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chaosmab {

ArmStats::ArmStats(int n_arms) {
  if (n_arms < 1) throw std::invalid_argument("need at least one arm");
  pulls_.resize(static_cast<std::size_t>(n_arms), 0);
  wins_.resize(static_cast<std::size_t>(n_arms), 0);
}

void ArmStats::record(int arm, bool hit) {
  if (arm < 0 || arm >= n_arms())
    throw std::out_of_range("arm index " + std::to_string(arm + 1) +
                            " outside 1.." + std::to_string(n_arms()));
  ++pulls_[static_cast<std::size_t>(arm)];
  if (hit) ++wins_[static_cast<std::size_t>(arm)];
  ++total_;
}

int thompson_select(const ArmStats& stats, Xoshiro256& rng) {
  int best = 0;
  double best_theta = -1.0;
  std::uint32_t ties = 1;
  for (int i = 0; i < stats.n_arms(); ++i) {
    const double wins = static_cast<double>(stats.wins(i));
    const double losses = static_cast<double>(stats.pulls(i) - stats.wins(i));
    const double theta = rng.next_beta(wins + 1.0, losses + 1.0);
    if (theta > best_theta) {
      best = i;
      best_theta = theta;
      ties = 1;
    } else if (theta == best_theta) {
      ++ties;
      if (rng.next_below(ties) == 0) best = i;
    }
  }
  return best;
}

int ucb1tuned_select(const ArmStats& stats, std::int64_t total_plays, Xoshiro256& rng) {
  // initialization phase: uniform among unplayed arms
  std::uint32_t unplayed = 0;
  int pick = -1;
  for (int i = 0; i < stats.n_arms(); ++i) {
    if (stats.pulls(i) == 0) {
      ++unplayed;
      if (rng.next_below(unplayed) == 0) pick = i;
    }
  }
  if (pick >= 0) return pick;

  const double ln_t = std::log(static_cast<double>(std::max<std::int64_t>(total_plays, 1)));
  int best = 0;
  double best_index = -1.0;
  std::uint32_t ties = 1;
  for (int i = 0; i < stats.n_arms(); ++i) {
    const double n = static_cast<double>(stats.pulls(i));
    const double mean = stats.mean(i);
    const double variance = stats.reward_sum_squares(i) / n - mean * mean;
    const double v = variance + std::sqrt(2.0 * ln_t / n);
    const double index = mean + std::sqrt(ln_t / n * std::min(0.25, v));
    if (index > best_index) {
      best = i;
      best_index = index;
      ties = 1;
    } else if (index == best_index) {
      ++ties;
      if (rng.next_below(ties) == 0) best = i;
    }
  }
  return best;
}

}  // namespace chaosmab
