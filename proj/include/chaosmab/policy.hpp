#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>

#include "chaosmab/baselines.hpp"
#include "chaosmab/rng.hpp"
#include "chaosmab/tow.hpp"

namespace chaosmab {

enum class PolicyKind { tow_chaos, tow_uniform_noise, thompson, ucb1tuned };

PolicyKind parse_policy(std::string_view name);
std::string_view policy_name(PolicyKind kind);

// Stable id used in seed derivation; never reorder.
constexpr std::uint64_t policy_seed_id(PolicyKind kind) noexcept {
  switch (kind) {
    case PolicyKind::tow_chaos: return 1;
    case PolicyKind::tow_uniform_noise: return 2;
    case PolicyKind::thompson: return 3;
    case PolicyKind::ucb1tuned: return 4;
  }
  return 0;
}

// Whether the runner must supply per-arm intensities to select().
constexpr bool policy_uses_intensities(PolicyKind kind) noexcept {
  return kind == PolicyKind::tow_chaos || kind == PolicyKind::tow_uniform_noise;
}

// Common select/record surface so the episode loop is policy-agnostic.
// Baselines ignore the intensity span.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual int select(std::span<const double> intensities, Xoshiro256& rng) = 0;
  virtual void record(int arm, bool hit) = 0;
};

class TowPolicy final : public Policy {
 public:
  TowPolicy(int n_arms, double k) : state_(n_arms, k) {}
  int select(std::span<const double> intensities, Xoshiro256& rng) override {
    return state_.select(intensities, rng);
  }
  void record(int arm, bool hit) override { state_.record(arm, hit); }
  const TowState& state() const noexcept { return state_; }

 private:
  TowState state_;
};

class ThompsonPolicy final : public Policy {
 public:
  explicit ThompsonPolicy(int n_arms) : stats_(n_arms) {}
  int select(std::span<const double>, Xoshiro256& rng) override {
    return thompson_select(stats_, rng);
  }
  void record(int arm, bool hit) override { stats_.record(arm, hit); }

 private:
  ArmStats stats_;
};

class Ucb1TunedPolicy final : public Policy {
 public:
  explicit Ucb1TunedPolicy(int n_arms) : stats_(n_arms) {}
  int select(std::span<const double>, Xoshiro256& rng) override {
    return ucb1tuned_select(stats_, stats_.total_pulls(), rng);
  }
  void record(int arm, bool hit) override { stats_.record(arm, hit); }

 private:
  ArmStats stats_;
};

std::unique_ptr<Policy> make_policy(PolicyKind kind, int n_arms, double k);

}  // namespace chaosmab
