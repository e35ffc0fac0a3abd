#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "chaosmab/chaos.hpp"
#include "chaosmab/policy.hpp"

namespace chaosmab {

// Everything a benchmark run needs, resolvable from a flat key=value config
// file plus command-line overrides.
struct ExperimentConfig {
  std::vector<PolicyKind> policies = {PolicyKind::tow_chaos};
  std::vector<int> arm_counts = {8, 16, 32, 64, 128, 256, 512};
  std::optional<std::size_t> plays;  // unset = per-(policy, N) auto budget
  int cycles = 100;
  std::uint64_t master_seed = 42;
  MapParams map;
  MapMode mode = MapMode::continuous;
  double k = 15.0;
  int grid_side = 32;  // 0 = smallest grid holding the arms (ceil sqrt N)
  double jitter = 0.0;
  double threshold = 0.95;
  std::size_t regret_eval_play = 6000;
  int threads = 1;
  std::string out_dir = "results";
  std::vector<double> custom_probabilities;  // empty = standard pattern
  // tie-break streams derive from the cycle stream unless this is set
  std::optional<std::uint64_t> tie_break_seed;

  void validate() const;

  // Hit probabilities for a sweep point (custom vector or standard pattern).
  std::vector<double> probabilities_for(int arms) const;

  // Grid for a sweep point, honoring grid_side = 0 (auto).
  GridGeometry geometry_for(int arms) const;

  // Per-(policy, N) play budget when plays = 0: calibrated crossing fits with
  // a safety factor, floored at regret_eval_play so the regret evaluation
  // point always exists.
  std::size_t resolved_plays(PolicyKind kind, int arms) const;
};

std::size_t auto_play_budget(PolicyKind kind, int arms, std::size_t floor_plays);

// Flat key=value file: one `key=value` per line, `#` starts a comment,
// blank lines ignored. Unknown keys are an error.
ExperimentConfig load_config_file(const std::filesystem::path& path,
                                  ExperimentConfig base = {});

// Applies a single key=value pair (shared by the file loader and CLI).
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

std::vector<int> parse_int_list(const std::string& text);
std::vector<PolicyKind> parse_policy_list(const std::string& text);

}  // namespace chaosmab
