#pragma once

#include <array>
#include <Eigen/Core>
#include <Eigen/Geometry>

// Four-vector kinematics in natural units (c = 1), metric (+,-,-,-).
namespace relbell {

using ThreeVector = Eigen::Vector3d;

// Largest accepted boost speed; gamma ~ 707 here.
inline constexpr double kBetaMax = 0.999999;

/// A three-vector of unit length (|n| = 1 within 1e-12).
class UnitVector {
 public:
  /// Normalizes v. Throws std::invalid_argument for zero or non-finite input.
  static UnitVector normalize(const ThreeVector& v);
  /// Accepts v only if it is already unit length within 1e-12.
  static UnitVector checked(const ThreeVector& v);

  static UnitVector x() { return UnitVector(ThreeVector::UnitX()); }
  static UnitVector y() { return UnitVector(ThreeVector::UnitY()); }
  static UnitVector z() { return UnitVector(ThreeVector::UnitZ()); }

  /// Direction with polar angle theta from +z and azimuth phi from +x.
  static UnitVector spherical(double theta, double phi);

  const ThreeVector& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }
  double dot(const UnitVector& o) const { return v_.dot(o.v_); }

 private:
  explicit UnitVector(const ThreeVector& v) : v_(v) {}
  ThreeVector v_;
};

/// Contravariant four-vector (x^0, x^1, x^2, x^3).
struct FourVector {
  std::array<double, 4> c{};

  FourVector() = default;
  FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}
  FourVector(double t, const ThreeVector& v) : c{t, v[0], v[1], v[2]} {}

  double operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
  double& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }
  double time() const { return c[0]; }
  ThreeVector spatial() const { return {c[1], c[2], c[3]}; }
  /// Covariant component x_mu = g_{mu mu} x^mu.
  double lower(int mu) const { return mu == 0 ? c[0] : -c[static_cast<std::size_t>(mu)]; }

  friend FourVector operator+(const FourVector& a, const FourVector& b);
  friend FourVector operator-(const FourVector& a, const FourVector& b);
  friend FourVector operator*(double s, const FourVector& a);
};

/// Diagonal metric entry g^{mu mu} = g_{mu mu}.
constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }

double minkowski_dot(const FourVector& x, const FourVector& y);

/// Pure boost of a particle of mass m from rest to speed beta along direction.
class BoostParams {
 public:
  /// Throws std::domain_error if beta is outside [0, kBetaMax] and
  /// std::invalid_argument if mass <= 0 or non-finite.
  BoostParams(double beta, UnitVector direction, double mass = 1.0);

  static BoostParams rest(double mass = 1.0) { return {0.0, UnitVector::z(), mass}; }

  double speed() const { return beta_; }
  const UnitVector& direction() const { return dir_; }
  double mass() const { return mass_; }
  double gamma() const { return gamma_; }
  double energy() const { return gamma_ * mass_; }
  /// Spatial momentum gamma*m*beta*direction.
  ThreeVector momentum() const { return energy() * beta_ * dir_.vec(); }
  /// Velocity three-vector beta*direction.
  ThreeVector velocity() const { return beta_ * dir_.vec(); }

 private:
  double beta_;
  UnitVector dir_;
  double mass_;
  double gamma_;
};

FourVector four_momentum(const BoostParams& boost);

/// Boosted spin polarization s = (p.n/m, n + (p.n) p / (m (E + m))).
/// Satisfies s.s = -1 and s.p = 0.
FourVector polarization_vector(const UnitVector& n, const BoostParams& boost);

/// Standard pure boost taking (m,0,0,0) to the four-momentum of `boost`.
FourVector boost_four_vector(const FourVector& v, const BoostParams& boost);

}  // namespace relbell
