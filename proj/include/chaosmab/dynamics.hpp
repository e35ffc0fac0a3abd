#pragma once

#include <span>
#include <vector>

#include "chaosmab/chaos.hpp"

namespace chaosmab {

struct Histogram {
  std::vector<double> edges;        // bins+1 edges covering [0, 255]
  std::vector<double> probability;  // sums to 1
};

// Normalized amplitude histogram over the full 8-bit range.
Histogram amplitude_histogram(std::span<const double> waveform, int bins);

struct BifurcationPoint {
  double beta;
  std::vector<double> samples;  // attractor states recorded past the transient
};

// Continuous-mode attractor scan over an inclusive beta interval.
std::vector<BifurcationPoint> bifurcation_scan(const MapParams& base, double beta_lo,
                                               double beta_hi, int beta_steps,
                                               int transient, int samples, double x0);

// Orbit states landing exactly on a critical point contribute ln of this
// floor instead of -inf.
inline constexpr double kSlopeFloor = 1e-12;

// Mean log |g'| along a continuous orbit after the transient.
double lyapunov_exponent(const MapParams& base, double beta, int iterations,
                         int transient, double x0);

// Diagonal crossings g(x) = x of the continuous map on [0, 255]
// (fine grid scan + bisection).
std::vector<double> find_fixed_points(const MapParams& base, double beta);

}  // namespace chaosmab
