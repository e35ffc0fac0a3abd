#include "chaosmab/tow.hpp"

#include <stdexcept>
#include <string>

namespace chaosmab {

TowState::TowState(int n_arms, double k) : k_(k) {
  if (n_arms < 2)
    throw std::invalid_argument("tug-of-war needs at least 2 arms (the bias "
                                "averages over the other arms)");
  wins_.resize(static_cast<std::size_t>(n_arms), 0);
  losses_.resize(static_cast<std::size_t>(n_arms), 0);
}

void TowState::record(int arm, bool hit) {
  if (arm < 0 || arm >= n_arms())
    throw std::out_of_range("arm index " + std::to_string(arm + 1) +
                            " outside 1.." + std::to_string(n_arms()));
  if (hit)
    ++wins_[static_cast<std::size_t>(arm)];
  else
    ++losses_[static_cast<std::size_t>(arm)];
}

std::vector<double> TowState::estimates() const {
  std::vector<double> est(wins_.size(), 0.0);
  for (std::size_t i = 0; i < wins_.size(); ++i) {
    const std::int64_t t = wins_[i] + losses_[i];
    if (t > 0) est[i] = static_cast<double>(wins_[i]) / static_cast<double>(t);
  }
  return est;
}

std::pair<double, double> TowState::coefficients() const {
  const auto est = estimates();
  double top1 = -1.0, top2 = -1.0;
  for (double e : est) {
    if (e > top1) {
      top2 = top1;
      top1 = e;
    } else if (e > top2) {
      top2 = e;
    }
  }
  const double omega = top1 + top2;
  return {2.0 - omega, omega};
}

std::vector<double> TowState::biases() const {
  const auto [delta, omega] = coefficients();
  const std::size_t n = wins_.size();
  std::vector<double> q(n);
  double q_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = delta * static_cast<double>(wins_[i]) - omega * static_cast<double>(losses_[i]);
    q_sum += q[i];
  }
  std::vector<double> b(n);
  const double inv = 1.0 / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) b[i] = q[i] - (q_sum - q[i]) * inv;
  return b;
}

int TowState::select(std::span<const double> intensities, Xoshiro256& tie_rng) const {
  if (static_cast<int>(intensities.size()) != n_arms())
    throw std::invalid_argument("intensity count " + std::to_string(intensities.size()) +
                                " does not match arm count " + std::to_string(n_arms()));
  const auto b = biases();
  std::vector<double> biased(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) biased[i] = intensities[i] + k_ * b[i];
  return argmax_uniform(biased, tie_rng);
}

}  // namespace chaosmab
