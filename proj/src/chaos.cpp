#include "chaosmab/chaos.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chaosmab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

MapMode parse_map_mode(std::string_view name) {
  if (name == "quantized") return MapMode::quantized;
  if (name == "continuous") return MapMode::continuous;
  throw std::invalid_argument("unknown map mode \"" + std::string(name) +
                              "\" (expected quantized or continuous)");
}

std::string_view map_mode_name(MapMode mode) {
  return mode == MapMode::quantized ? "quantized" : "continuous";
}

MapParams MapParams::with_alpha(double a, double b, double alpha, double beta,
                                double phi) {
  MapParams p;
  p.a = a;
  p.b = b;
  p.alpha = alpha;
  p.f = 1.0 / alpha;
  p.beta = beta;
  p.phi = phi;
  p.validate();
  return p;
}

void MapParams::validate() const {
  if (!(a > 0.0)) throw std::invalid_argument("map amplitude a must be positive");
  if (b - a < 0.0 || b + a > 255.0)
    throw std::invalid_argument("map range [b-a, b+a] must stay within [0, 255]");
  if (!(alpha > 0.0)) throw std::invalid_argument("effective range alpha must be positive");
  if (std::abs(f * alpha - 1.0) > 1e-9)
    throw std::invalid_argument("map frequency must satisfy f = 1/alpha");
  if (!(beta > 0.0)) throw std::invalid_argument("feedback coefficient beta must be positive");
}

double camera_response(double s_slm, const MapParams& p, MapMode mode) {
  const double out = p.a * std::cos(kTwoPi * p.f * s_slm) + p.b;
  return mode == MapMode::quantized ? quantize_count(out) : out;
}

double feedback_signal(double s_cam, const MapParams& p, MapMode mode) {
  double out = std::fmod(p.beta * s_cam, p.alpha);
  if (out < 0.0) out += p.alpha;
  if (mode == MapMode::quantized) {
    out = std::round(out);
    if (out >= p.alpha) out = 0.0;  // nearest integer on the modular circle
  }
  return out;
}

double step_map(double s, const MapParams& p, MapMode mode) {
  const double out = p.a * std::cos(kTwoPi * p.f * p.beta * s) + p.b;
  return mode == MapMode::quantized ? quantize_count(out) : out;
}

double map_slope(double s, const MapParams& p, double beta) {
  const double w = kTwoPi * p.f * beta;
  return -w * p.a * std::sin(w * s);
}

void GridGeometry::validate() const {
  if (side < 1) throw std::invalid_argument("grid side must be at least 1");
  if (arms < 1) throw std::invalid_argument("arm count must be at least 1");
  if (arms > pixel_count())
    throw std::invalid_argument("arm count " + std::to_string(arms) +
                                " exceeds grid capacity " + std::to_string(pixel_count()));
}

namespace {

MapParams jittered(const MapParams& base, double spread, Xoshiro256& rng) {
  MapParams p = base;
  const auto scale = [&] { return 1.0 + spread * (2.0 * rng.next_double() - 1.0); };
  p.a *= scale();
  p.b *= scale();
  p.f *= scale();
  p.alpha = 1.0 / p.f;
  // keep the jittered map inside the camera range
  p.a = std::clamp(p.a, 1e-3, 127.5);
  p.b = std::clamp(p.b, p.a, 255.0 - p.a);
  return p;
}

std::array<double, 256> build_lut(const MapParams& p) {
  std::array<double, 256> lut;
  for (int s = 0; s < 256; ++s)
    lut[static_cast<std::size_t>(s)] = step_map(static_cast<double>(s), p, MapMode::quantized);
  return lut;
}

}  // namespace

ChaosField::ChaosField(const GridGeometry& geometry, const MapParams& params,
                       MapMode mode, std::uint64_t seed, double jitter_spread)
    : geom_(geometry), mode_(mode) {
  geom_.validate();
  params.validate();
  if (jitter_spread < 0.0)
    throw std::invalid_argument("jitter spread must be non-negative");

  const int n = geom_.pixel_count();
  Xoshiro256 rng(seed);

  if (jitter_spread > 0.0) {
    params_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) params_.push_back(jittered(params, jitter_spread, rng));
  } else {
    params_.push_back(params);
  }

  states_.resize(static_cast<std::size_t>(n));
  for (double& s : states_) {
    // quantized: uniform on the 8-bit grid; continuous: uniform real on
    // [0, 255] so no two pixels start on the same orbit
    s = mode_ == MapMode::quantized ? static_cast<double>(rng.next_below(256))
                                    : rng.next_double() * 255.0;
  }

  if (mode_ == MapMode::quantized) {
    luts_.reserve(params_.size());
    for (const auto& p : params_) luts_.push_back(build_lut(p));
  }
}

const MapParams& ChaosField::params_for(int pixel) const {
  return params_.size() == 1 ? params_[0] : params_[static_cast<std::size_t>(pixel)];
}

void ChaosField::step() {
  if (mode_ == MapMode::quantized) {
    if (luts_.size() == 1) {
      const auto& lut = luts_[0];
      for (double& s : states_) s = lut[static_cast<std::size_t>(s)];
    } else {
      for (std::size_t i = 0; i < states_.size(); ++i)
        states_[i] = luts_[i][static_cast<std::size_t>(states_[i])];
    }
  } else {
    if (params_.size() == 1) {
      const MapParams& p = params_[0];
      const double w = kTwoPi * p.f * p.beta;
      for (double& s : states_) s = p.a * std::cos(w * s) + p.b;
    } else {
      for (std::size_t i = 0; i < states_.size(); ++i) {
        const MapParams& p = params_[i];
        states_[i] = p.a * std::cos(kTwoPi * p.f * p.beta * states_[i]) + p.b;
      }
    }
  }
  ++frame_;
}

}  // namespace chaosmab
