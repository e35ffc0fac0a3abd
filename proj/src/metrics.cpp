#include "chaosmab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chaosmab {

namespace {

std::size_t common_play_count(std::span<const RunTrace> traces) {
  if (traces.empty()) throw std::invalid_argument("need at least one trace");
  const std::size_t m = traces.front().plays.size();
  for (const auto& t : traces)
    if (t.plays.size() != m)
      throw std::invalid_argument("traces have unequal play counts (" +
                                  std::to_string(t.plays.size()) + " vs " +
                                  std::to_string(m) + ")");
  return m;
}

}  // namespace

std::vector<double> cdr_curve(std::span<const RunTrace> traces, int best_arm) {
  const std::size_t m = common_play_count(traces);
  std::vector<std::size_t> correct(m, 0);
  for (const auto& trace : traces)
    for (std::size_t t = 0; t < m; ++t)
      if (trace.plays[t].arm == best_arm) ++correct[t];
  std::vector<double> cdr(m);
  const double n = static_cast<double>(traces.size());
  for (std::size_t t = 0; t < m; ++t) cdr[t] = static_cast<double>(correct[t]) / n;
  return cdr;
}

std::vector<double> regret_curve(std::span<const RunTrace> traces,
                                 std::span<const double> probabilities) {
  const std::size_t m = common_play_count(traces);
  const double p_max = *std::max_element(probabilities.begin(), probabilities.end());

  // mean over cycles (in cycle order, for bit-stable aggregation) of the
  // cumulative expected reward up to each play
  std::vector<double> mean_cum(m, 0.0);
  for (const auto& trace : traces) {
    double cum = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
      const int arm = trace.plays[t].arm;
      if (arm < 0 || arm >= static_cast<int>(probabilities.size()))
        throw std::invalid_argument("trace selects arm outside the probability vector");
      cum += probabilities[static_cast<std::size_t>(arm)];
      mean_cum[t] += cum;
    }
  }
  const double n = static_cast<double>(traces.size());
  std::vector<double> regret(m);
  for (std::size_t t = 0; t < m; ++t)
    regret[t] = static_cast<double>(t + 1) * p_max - mean_cum[t] / n;
  return regret;
}

std::optional<std::size_t> plays_to_threshold(std::span<const double> cdr,
                                              double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw std::invalid_argument("threshold must lie in (0, 1)");
  for (std::size_t t = 0; t < cdr.size(); ++t)
    if (cdr[t] >= threshold) return t + 1;
  return std::nullopt;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2)
    throw std::invalid_argument("power-law fit needs at least 2 points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("power-law fit needs strictly positive points");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("power-law fit needs at least two distinct N values");

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.coefficient = std::exp(my - fit.exponent * mx);
  double ss = 0.0;
  for (const auto& [x, y] : points) {
    const double r = std::log(y) - (std::log(fit.coefficient) + fit.exponent * std::log(x));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace chaosmab
