#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "relbell/minkowski.hpp"

// Reproducible random inputs for property checks. Only the raw 64-bit engine
// output is used, so sequences are identical across standard libraries.
namespace relbell {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform on the sphere.
  UnitVector direction();

  /// Random direction and mass in [0.5, 3), speed drawn from `speeds`.
  BoostParams boost(std::span<const double> speeds);

  /// Random direction, speed uniform in [0, max_speed], mass in [0.5, 3).
  BoostParams boost(double max_speed = 0.999);

 private:
  std::mt19937_64 rng_;
};

}  // namespace relbell
