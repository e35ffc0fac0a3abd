#include "chaosmab/policy.hpp"

#include <stdexcept>
#include <string>

namespace chaosmab {

PolicyKind parse_policy(std::string_view name) {
  if (name == "tow-chaos") return PolicyKind::tow_chaos;
  if (name == "tow-uniform-noise") return PolicyKind::tow_uniform_noise;
  if (name == "thompson") return PolicyKind::thompson;
  if (name == "ucb1tuned") return PolicyKind::ucb1tuned;
  throw std::invalid_argument("unknown policy \"" + std::string(name) +
                              "\" (expected tow-chaos, tow-uniform-noise, "
                              "thompson or ucb1tuned)");
}

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::tow_chaos: return "tow-chaos";
    case PolicyKind::tow_uniform_noise: return "tow-uniform-noise";
    case PolicyKind::thompson: return "thompson";
    case PolicyKind::ucb1tuned: return "ucb1tuned";
  }
  return "?";
}

std::unique_ptr<Policy> make_policy(PolicyKind kind, int n_arms, double k) {
  switch (kind) {
    case PolicyKind::tow_chaos:
    case PolicyKind::tow_uniform_noise:
      return std::make_unique<TowPolicy>(n_arms, k);
    case PolicyKind::thompson:
      return std::make_unique<ThompsonPolicy>(n_arms);
    case PolicyKind::ucb1tuned:
      return std::make_unique<Ucb1TunedPolicy>(n_arms);
  }
  throw std::invalid_argument("unhandled policy kind");
}

}  // namespace chaosmab
