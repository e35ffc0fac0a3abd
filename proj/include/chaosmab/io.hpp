#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaosmab/dynamics.hpp"
#include "chaosmab/runner.hpp"

namespace chaosmab {

// Build/version string baked in at configure time (git-describe style).
std::string_view version_string();

// All floating-point output goes through this: 9 significant digits.
std::string format_g9(double value);

std::string json_escape(std::string_view text);

// Arm indices are written 1-based in every file, matching the slot-machine
// numbering (machine 3 is the best arm of the standard pattern).

void write_cdr_csv(const std::filesystem::path& path,
                   std::span<const SweepResult> sweeps);
void write_regret_csv(const std::filesystem::path& path,
                      std::span<const SweepResult> sweeps);
void write_scaling_csv(const std::filesystem::path& path,
                       std::span<const SweepResult> sweeps);
void write_fit_json(const std::filesystem::path& path,
                    std::span<const FitRecord> fits);
void write_summary_json(const std::filesystem::path& path,
                        const ExperimentConfig& config,
                        std::span<const SweepResult> sweeps,
                        std::span<const FitRecord> fits);

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace);

void write_field_csv(const std::filesystem::path& path, int side,
                     std::span<const std::pair<std::uint64_t, std::vector<double>>> frames);
void write_histogram_csv(const std::filesystem::path& path, const Histogram& histogram);
void write_bifurcation_csv(const std::filesystem::path& path,
                           std::span<const BifurcationPoint> points);
void write_lyapunov_csv(const std::filesystem::path& path,
                        std::span<const std::pair<double, double>> lambdas);

// Reads (policy, arms, plays_to_threshold) rows written by write_scaling_csv.
struct ScalingRow {
  std::string policy;
  double arms = 0.0;
  double plays = 0.0;
};
std::vector<ScalingRow> read_scaling_csv(const std::filesystem::path& path);

// Writes the benchmark output set; removes everything it wrote if any file
// fails, then rethrows with the offending path.
void write_benchmark_outputs(const ExperimentConfig& config,
                             const BenchmarkResult& result);

}  // namespace chaosmab
