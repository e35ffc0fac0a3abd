#include "chaosmab/bandit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chaosmab {

std::vector<double> standard_probabilities(int n_arms) {
  if (n_arms < 4 || n_arms % 2 != 0)
    throw std::invalid_argument(
        "the standard hit-probability pattern (0.7, 0.5, 0.9, 0.1, 0.7, 0.5, ...) "
        "is defined pairwise and needs an even arm count of at least 4; got " +
        std::to_string(n_arms));
  std::vector<double> p(static_cast<std::size_t>(n_arms));
  for (int i = 0; i < n_arms; i += 2) {
    p[static_cast<std::size_t>(i)] = 0.7;
    p[static_cast<std::size_t>(i) + 1] = 0.5;
  }
  p[2] = 0.9;
  p[3] = 0.1;
  return p;
}

BanditEnv::BanditEnv(std::vector<double> probabilities, std::uint64_t seed)
    : probs_(std::move(probabilities)), best_(0), rng_(seed) {
  if (probs_.empty()) throw std::invalid_argument("bandit needs at least one arm");
  for (double p : probs_)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("hit probabilities must lie in [0, 1]");
  best_ = static_cast<int>(
      std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

bool BanditEnv::play(int arm) {
  if (arm < 0 || arm >= n_arms())
    throw std::out_of_range("arm index " + std::to_string(arm + 1) +
                            " outside 1.." + std::to_string(n_arms()));
  return rng_.next_double() < probs_[static_cast<std::size_t>(arm)];
}

}  // namespace chaosmab
