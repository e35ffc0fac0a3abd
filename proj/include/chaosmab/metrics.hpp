#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chaosmab {

struct PlayRecord {
  std::uint16_t arm;  // 0-based
  std::uint8_t hit;
};

// One cycle's play-by-play record; play t is plays[t-1].
struct RunTrace {
  int cycle = 0;
  std::vector<PlayRecord> plays;
};

// Fraction of cycles selecting best_arm at each play. All traces must have
// the same play count.
std::vector<double> cdr_curve(std::span<const RunTrace> traces, int best_arm);

// Cycle-averaged expected-reward shortfall against always playing the best
// arm, cumulative up to each play.
std::vector<double> regret_curve(std::span<const RunTrace> traces,
                                 std::span<const double> probabilities);

// First play (1-based) at which the curve reaches the threshold, or nullopt.
std::optional<std::size_t> plays_to_threshold(std::span<const double> cdr,
                                              double threshold);

struct PowerLawFit {
  double coefficient = 0.0;  // c in y = c * N^e
  double exponent = 0.0;     // e
  double residual = 0.0;     // RMS of log-space residuals
};

// Least-squares line through (ln N, ln y); needs >= 2 points, all positive.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace chaosmab
