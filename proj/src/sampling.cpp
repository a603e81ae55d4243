#include "relbell/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relbell {

UnitVector Sampler::direction() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector::normalize(ThreeVector(r * std::cos(phi), r * std::sin(phi), z));
}

BoostParams Sampler::boost(std::span<const double> speeds) {
  const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(speeds.size()));
  const UnitVector dir = direction();
  return BoostParams(speeds[std::min(k, speeds.size() - 1)], dir, uniform(0.5, 3.0));
}

BoostParams Sampler::boost(double max_speed) {
  const double beta = uniform(0.0, max_speed);
  const UnitVector dir = direction();
  return BoostParams(beta, dir, uniform(0.5, 3.0));
}

}  // namespace relbell
