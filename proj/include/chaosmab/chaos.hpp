#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "chaosmab/rng.hpp"

namespace chaosmab {

// quantized: states live on the 8-bit camera grid {0..255}, every map output
// rounded half away from zero and clamped (faithful to the SLM/camera loop).
// continuous: real-valued states, required for Lyapunov/bifurcation analysis
// and the default for decision-making runs.
enum class MapMode { quantized, continuous };

MapMode parse_map_mode(std::string_view name);
std::string_view map_mode_name(MapMode mode);

// Parameters of the sinusoidal map s' = a*cos(2*pi*f*beta*s) + b with
// f = 1/alpha, so the modulo in the feedback stage can be omitted.
// Defaults are the values estimated from the experimental loop; phi is the
// phase offset of the raw SLM response, compensated upstream and kept only
// for reference and parameter-jitter modelling.
struct MapParams {
  double a = 101.0;
  double b = 104.0;
  double alpha = 201.0;
  double f = 1.0 / 201.0;
  double beta = 3.2;
  double phi = 23.0;

  static MapParams with_alpha(double a, double b, double alpha, double beta,
                              double phi = 23.0);

  // a > 0, [b-a, b+a] inside [0, 255], f = 1/alpha, beta > 0
  void validate() const;
};

// Round half away from zero and clamp to the 8-bit range.
inline double quantize_count(double x) noexcept {
  const double r = std::round(x);
  return r < 0.0 ? 0.0 : (r > 255.0 ? 255.0 : r);
}

// Camera intensity for a phase-compensated SLM level: a*cos(2*pi*f*s) + b.
double camera_response(double s_slm, const MapParams& p, MapMode mode);

// Feedback level written back to the SLM: (beta * s_cam) mod alpha.
// Quantized mode rounds to the nearest integer of the modular circle, so a
// value rounding up to alpha wraps to 0.
double feedback_signal(double s_cam, const MapParams& p, MapMode mode);

// One loop iteration, camera_response(feedback_signal(s)) collapsed with
// f = 1/alpha: a*cos(2*pi*f*beta*s) + b.
double step_map(double s, const MapParams& p, MapMode mode);

// d/ds of the continuous map at s, with the feedback coefficient overridden.
double map_slope(double s, const MapParams& p, double beta);

// Macro-pixel grid: side x side pixels, the first `arms` of which (row-major,
// arm i -> pixel i) are assigned to slot machines.
struct GridGeometry {
  int side = 32;
  int arms = 64;

  int pixel_count() const noexcept { return side * side; }
  void validate() const;
};

// One independent copy of the map per macro-pixel. Pixels never couple; the
// whole grid advances one frame per step() call.
class ChaosField {
 public:
  // jitter_spread > 0 gives every pixel its own params with (a, b, f) each
  // scaled by 1 + spread*u, u uniform on [-1, 1] (models the residual
  // heterogeneity of the real SLM after alignment). Negative spread rejected.
  ChaosField(const GridGeometry& geometry, const MapParams& params, MapMode mode,
             std::uint64_t seed, double jitter_spread = 0.0);

  void step();

  std::span<const double> states() const noexcept { return states_; }
  double state(int pixel) const { return states_[static_cast<std::size_t>(pixel)]; }
  const MapParams& params_for(int pixel) const;
  const GridGeometry& geometry() const noexcept { return geom_; }
  MapMode mode() const noexcept { return mode_; }
  std::uint64_t frame() const noexcept { return frame_; }

 private:
  GridGeometry geom_;
  MapMode mode_;
  std::vector<MapParams> params_;                 // size 1 when shared
  std::vector<std::array<double, 256>> luts_;     // quantized fast path
  std::vector<double> states_;
  std::uint64_t frame_ = 0;
};

}  // namespace chaosmab
