#include "relbell/spinors.hpp"

#include <cmath>

namespace relbell {

Eigen::Vector2cd pauli_spinor(SpinLabel spin) {
  return spin == SpinLabel::Up ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
}

Spinor rest_spinor(Species kind, SpinLabel spin) {
  const int offset = kind == Species::Particle ? 0 : 2;
  Spinor u = Spinor::Zero();
  u[offset + (spin == SpinLabel::Up ? 0 : 1)] = 1.0;
  return u;
}

Spinor boosted_spinor(const BoostParams& boost, SpinLabel spin) {
  const double m = boost.mass();
  const double e = boost.energy();
  const Eigen::Vector2cd phi = pauli_spinor(spin);
  const Eigen::Vector2cd lower = sigma_dot(boost.momentum()) * phi / (e + m);
  Spinor u;
  u << phi, lower;
  return std::sqrt((e + m) / (2.0 * e)) * u;
}

std::pair<Spinor, Spinor> positive_energy_projector_basis(const BoostParams& boost) {
  return {boosted_spinor(boost, SpinLabel::Up), boosted_spinor(boost, SpinLabel::Down)};
}

}  // namespace relbell
