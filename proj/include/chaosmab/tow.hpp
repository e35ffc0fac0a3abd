#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chaosmab/rng.hpp"

namespace chaosmab {

// Tug-of-war decision state: cumulative win/loss counters per arm plus the
// bias coefficient k. Biases are recomputed from the counters on every call
// (they are a pure function of the cumulative statistics):
//
//   P_i = W_i / T_i               (0 while T_i = 0)
//   delta = 2 - (P_top1 + P_top2),  omega = P_top1 + P_top2
//   Q_i = delta * W_i - omega * L_i
//   B_i = Q_i - mean of the other arms' Q
//
// The mean subtraction makes the biases zero-sum: one arm's gain is the
// others' loss.
class TowState {
 public:
  TowState(int n_arms, double k);  // n_arms >= 2

  void record(int arm, bool hit);

  std::vector<double> estimates() const;

  // (delta, omega) from the two largest estimates, counted with multiplicity;
  // delta + omega = 2 always.
  std::pair<double, double> coefficients() const;

  std::vector<double> biases() const;

  // argmax_i of intensities[i] + k * B_i; exact ties broken uniformly.
  int select(std::span<const double> intensities, Xoshiro256& tie_rng) const;

  int n_arms() const noexcept { return static_cast<int>(wins_.size()); }
  double k() const noexcept { return k_; }
  std::int64_t wins(int arm) const { return wins_[static_cast<std::size_t>(arm)]; }
  std::int64_t losses(int arm) const { return losses_[static_cast<std::size_t>(arm)]; }
  std::int64_t total(int arm) const { return wins(arm) + losses(arm); }

 private:
  std::vector<std::int64_t> wins_;
  std::vector<std::int64_t> losses_;
  double k_;
};

}  // namespace chaosmab
