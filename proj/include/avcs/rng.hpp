#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "avcs/geometry.hpp"

namespace avcs {

// All randomness flows through std::mt19937_64 (its output sequence is fixed by
// the standard). Conversions to reals are done here rather than through
// std::uniform_real_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  // Uniform over the disc of the given radius centred at the origin.
  Point in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace avcs
