#include "relbell/minkowski.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relbell {

UnitVector UnitVector::normalize(const ThreeVector& v) {
  if (!v.allFinite()) throw std::invalid_argument("direction has non-finite components");
  const double norm = v.norm();
  if (norm == 0.0) throw std::invalid_argument("direction must be non-zero");
  return UnitVector(v / norm);
}

UnitVector UnitVector::checked(const ThreeVector& v) {
  if (!v.allFinite() || std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("vector is not of unit length");
  return UnitVector(v);
}

UnitVector UnitVector::spherical(double theta, double phi) {
  const double st = std::sin(theta);
  return UnitVector(ThreeVector(st * std::cos(phi), st * std::sin(phi), std::cos(theta)));
}

FourVector operator+(const FourVector& a, const FourVector& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

FourVector operator-(const FourVector& a, const FourVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

FourVector operator*(double s, const FourVector& a) { return {s * a[0], s * a[1], s * a[2], s * a[3]}; }

double minkowski_dot(const FourVector& x, const FourVector& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

BoostParams::BoostParams(double beta, UnitVector direction, double mass)
    : beta_(beta), dir_(direction), mass_(mass) {
  if (!std::isfinite(beta) || beta < 0.0 || beta > kBetaMax)
    throw std::domain_error("boost speed " + std::to_string(beta) + " outside [0, 0.999999]");
  if (!std::isfinite(mass) || mass <= 0.0) throw std::invalid_argument("mass must be positive");
  gamma_ = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

FourVector four_momentum(const BoostParams& boost) { return {boost.energy(), boost.momentum()}; }

FourVector polarization_vector(const UnitVector& n, const BoostParams& boost) {
  const double m = boost.mass();
  const double e = boost.energy();
  const ThreeVector p = boost.momentum();
  const double pn = p.dot(n.vec());
  return {pn / m, n.vec() + (pn / (m * (e + m))) * p};
}

FourVector boost_four_vector(const FourVector& v, const BoostParams& boost) {
  const double g = boost.gamma();
  const double beta = boost.speed();
  const ThreeVector d = boost.direction().vec();
  const ThreeVector x = v.spatial();
  const double xpar = d.dot(x);
  // t' = g (t + beta x_par), x'_par = g (x_par + beta t), x_perp unchanged
  const double t = g * (v.time() + beta * xpar);
  const ThreeVector out = x + ((g - 1.0) * xpar + g * beta * v.time()) * d;
  return {t, out};
}

}  // namespace relbell
