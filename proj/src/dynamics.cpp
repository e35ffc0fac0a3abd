#include "chaosmab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chaosmab {

Histogram amplitude_histogram(std::span<const double> waveform, int bins) {
  if (waveform.empty()) throw std::invalid_argument("histogram needs a non-empty waveform");
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");

  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i)
    h.edges[static_cast<std::size_t>(i)] = 255.0 * i / bins;

  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double v : waveform) {
    int idx = static_cast<int>(v / 255.0 * bins);
    idx = std::clamp(idx, 0, bins - 1);
    ++counts[static_cast<std::size_t>(idx)];
  }

  h.probability.resize(static_cast<std::size_t>(bins));
  const double total = static_cast<double>(waveform.size());
  for (int i = 0; i < bins; ++i)
    h.probability[static_cast<std::size_t>(i)] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / total;
  return h;
}

std::vector<BifurcationPoint> bifurcation_scan(const MapParams& base, double beta_lo,
                                               double beta_hi, int beta_steps,
                                               int transient, int samples, double x0) {
  if (!(beta_lo > 0.0) || !(beta_hi >= beta_lo))
    throw std::invalid_argument("bifurcation scan needs 0 < beta_lo <= beta_hi");
  if (beta_steps < 1 || samples < 1 || transient < 0)
    throw std::invalid_argument("bifurcation scan counts must be positive");

  std::vector<BifurcationPoint> out;
  out.reserve(static_cast<std::size_t>(beta_steps));
  for (int k = 0; k < beta_steps; ++k) {
    MapParams p = base;
    p.beta = beta_steps == 1
                 ? beta_lo
                 : beta_lo + (beta_hi - beta_lo) * k / (beta_steps - 1);
    double x = x0;
    for (int i = 0; i < transient; ++i) x = step_map(x, p, MapMode::continuous);
    BifurcationPoint point;
    point.beta = p.beta;
    point.samples.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      x = step_map(x, p, MapMode::continuous);
      point.samples.push_back(x);
    }
    out.push_back(std::move(point));
  }
  return out;
}

double lyapunov_exponent(const MapParams& base, double beta, int iterations,
                         int transient, double x0) {
  if (iterations < 1 || transient < 0)
    throw std::invalid_argument("lyapunov exponent needs positive iteration counts");
  MapParams p = base;
  p.beta = beta;
  double x = x0;
  for (int i = 0; i < transient; ++i) x = step_map(x, p, MapMode::continuous);
  double acc = 0.0;
  for (int i = 0; i < iterations; ++i) {
    const double slope = std::abs(map_slope(x, p, beta));
    acc += std::log(std::max(slope, kSlopeFloor));
    x = step_map(x, p, MapMode::continuous);
  }
  return acc / iterations;
}

std::vector<double> find_fixed_points(const MapParams& base, double beta) {
  MapParams p = base;
  p.beta = beta;
  const auto residual = [&](double x) { return step_map(x, p, MapMode::continuous) - x; };

  constexpr int kGrid = 200000;
  std::vector<double> roots;
  double prev_x = 0.0;
  double prev_r = residual(prev_x);
  for (int i = 1; i <= kGrid; ++i) {
    const double x = 255.0 * i / kGrid;
    const double r = residual(x);
    if (prev_r == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_r < 0.0) != (r < 0.0)) {
      double lo = prev_x, hi = x;
      double rlo = prev_r;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double rm = residual(mid);
        if ((rm < 0.0) == (rlo < 0.0)) {
          lo = mid;
          rlo = rm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_r = r;
  }
  return roots;
}

}  // namespace chaosmab
