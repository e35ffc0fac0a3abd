#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace chaosmab {

// SplitMix64 finalizer (Steele, Lea & Flood 2014). Stateless bit mixer used
// for seeding and stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Derives an independent stream seed by folding words into the base seed,
// one SplitMix64 round per word. Order-sensitive, so (a, b) and (b, a)
// yield unrelated streams.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = base;
  for (std::uint64_t w : words) {
    h += kGoldenGamma;
    h = mix64(h ^ mix64(w + kGoldenGamma));
  }
  return h;
}

// xoshiro256** 1.0 (Blackman & Vigna), state seeded through SplitMix64.
// Pure 64-bit integer arithmetic, so sequences are identical on every
// platform for a given seed.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& w : state_) {
      s += kGoldenGamma;
      w = mix64(s);
    }
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, n); Lemire's multiply-shift with rejection.
  std::uint32_t next_below(std::uint32_t n) noexcept {
    auto m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      const std::uint32_t threshold = (0u - n) % n;
      while (lo < threshold) {
        m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  // Standard normal via the Marsaglia polar method (second value cached).
  double next_normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
  }

  // Gamma(shape, 1) via Marsaglia & Tsang (2000); shape < 1 handled with the
  // usual boost Gamma(a) = Gamma(a+1) * U^(1/a).
  double next_gamma(double shape) noexcept {
    if (shape < 1.0) {
      const double u = next_double();
      return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = next_normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = next_double();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Beta(alpha, beta) as the gamma ratio X / (X + Y).
  double next_beta(double alpha, double beta) noexcept {
    const double x = next_gamma(alpha);
    const double y = next_gamma(beta);
    const double sum = x + y;
    return sum > 0.0 ? x / sum : 0.5;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Index of the maximum value; exact ties broken uniformly at random
// (single-pass reservoir rule, one rng draw per tie encountered).
inline int argmax_uniform(std::span<const double> values, Xoshiro256& rng) noexcept {
  int best = 0;
  std::uint32_t ties = 1;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) {
      best = i;
      ties = 1;
    } else if (values[i] == values[best]) {
      ++ties;
      if (rng.next_below(ties) == 0) best = i;
    }
  }
  return best;
}

}  // namespace chaosmab
