#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chaosmab/config.hpp"
#include "chaosmab/metrics.hpp"

namespace chaosmab {

// Sub-stream purposes hung off a cycle's root seed.
inline constexpr std::uint64_t kEnvStream = 1;
inline constexpr std::uint64_t kFieldStream = 2;
inline constexpr std::uint64_t kTieStream = 3;
inline constexpr std::uint64_t kNoiseStream = 4;

// Root seed for one (policy, N, cycle) triple; no two triples share a stream,
// so scheduling order cannot affect results.
constexpr std::uint64_t cycle_seed(std::uint64_t master_seed, PolicyKind kind,
                                   int arms, int cycle) noexcept {
  return derive_seed(master_seed, {policy_seed_id(kind),
                                   static_cast<std::uint64_t>(arms),
                                   static_cast<std::uint64_t>(cycle)});
}

// One cycle: per play, advance the chaos field one frame (tow-chaos), read
// the arm intensities, select, play the bandit, update the policy.
// Deterministic given (config, kind, arms, cycle).
RunTrace run_episode(const ExperimentConfig& config, PolicyKind kind, int arms,
                     int cycle);

struct SweepResult {
  PolicyKind kind = PolicyKind::tow_chaos;
  int arms = 0;
  std::size_t plays = 0;
  int cycles = 0;
  std::vector<double> cdr;
  std::vector<double> regret;
  std::optional<std::size_t> crossing;       // plays to reach the CDR threshold
  std::optional<double> regret_at_eval;      // regret at config.regret_eval_play
};

struct FitRecord {
  PolicyKind kind = PolicyKind::tow_chaos;
  PowerLawFit fit;
  std::vector<std::pair<double, double>> points;  // (N, plays_to_threshold)
};

struct BenchmarkResult {
  std::vector<SweepResult> sweeps;
  std::vector<FitRecord> fits;
};

// All cycles of one (policy, N) point, cycles run in parallel when
// config.threads allows; aggregation is ordered by cycle index so outputs do
// not depend on the thread budget.
SweepResult run_sweep(const ExperimentConfig& config, PolicyKind kind, int arms);

// Full sweep over config.policies x config.arm_counts plus per-policy
// power-law fits of plays-to-threshold. With write_outputs, emits
// cdr.csv / regret.csv / scaling.csv / fit.json / summary.json into
// config.out_dir (partial outputs are removed if any write fails).
BenchmarkResult run_benchmark(const ExperimentConfig& config,
                              bool write_outputs = true);

}  // namespace chaosmab
