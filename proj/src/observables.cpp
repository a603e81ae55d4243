#include "relbell/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace relbell {

namespace {

void check_velocity(const ThreeVector& u) {
  if (!u.allFinite() || u.squaredNorm() >= 1.0)
    throw std::domain_error("velocity must satisfy |u| < 1");
}

const Spinor& pick(const std::pair<Spinor, Spinor>& basis, SpinLabel s) {
  return s == SpinLabel::Up ? basis.first : basis.second;
}

}  // namespace

SpinObservable spin_observable(const UnitVector& n, const BoostParams& boost) {
  const FourVector s = polarization_vector(n, boost);
  const Matrix4 m = gamma5() * slash(s) * slash(four_momentum(boost)) / boost.mass();
  return {n, boost, s, m};
}

Matrix4 gamma5_slash(const UnitVector& n, const BoostParams& boost) {
  return gamma5() * slash(polarization_vector(n, boost));
}

Matrix4 rest_spin_operator(const UnitVector& n) {
  return n[0] * big_sigma(1) + n[1] * big_sigma(2) + n[2] * big_sigma(3);
}

double expectation_closed_form(const UnitVector& n, const BoostParams& boost, SpinLabel spin) {
  const double m = boost.mass();
  const double e = boost.energy();
  const ThreeVector p = boost.momentum();
  const ThreeVector s = polarization_vector(n, boost).spatial();
  const Eigen::Vector2cd phi = pauli_spinor(spin);
  const Matrix2 sp = sigma_dot(p);
  const Matrix2 ss = sigma_dot(s);
  const Complex direct = phi.dot(ss * phi);
  const Complex sandwich = phi.dot(sp * ss * sp * phi);
  return ((e + m) / (2.0 * e)) * (direct - sandwich / ((e + m) * (e + m))).real();
}

Complex matrix_element_closed_form(SpinLabel row, SpinLabel col, const UnitVector& n, const BoostParams& boost) {
  if (boost.speed() > 0.0 && std::abs(boost.direction()[2] - 1.0) > 1e-15)
    throw std::invalid_argument("closed-form matrix elements require a boost along +z");
  const FourVector s = polarization_vector(n, boost);
  if (row == col) return sign(row) * s[3] / boost.gamma();
  if (row == SpinLabel::Up) return {s[1], -s[2]};
  return {s[1], s[2]};
}

Complex matrix_element(SpinLabel row, SpinLabel col, const UnitVector& n, const BoostParams& boost) {
  const auto basis = positive_energy_projector_basis(boost);
  return pick(basis, row).dot(gamma5_slash(n, boost) * pick(basis, col));
}

Matrix2 effective_two_by_two(const UnitVector& n, const BoostParams& boost) {
  const auto basis = positive_energy_projector_basis(boost);
  const Matrix4 op = spin_observable(n, boost).matrix;
  Eigen::Matrix<Complex, 4, 2> u;
  u << basis.first, basis.second;
  return u.adjoint() * op * u;
}

std::pair<Matrix2, Matrix2> sigma_sandwich_identity(const ThreeVector& p, const ThreeVector& s) {
  const Matrix2 sp = sigma_dot(p);
  const Matrix2 lhs = sp * sigma_dot(s) * sp;
  const Matrix2 rhs = p.squaredNorm() * (s[2] * pauli(3) - s[1] * pauli(2) - s[0] * pauli(1));
  return {lhs, rhs};
}

CzachorObservable czachor_observable(const UnitVector& a, const ThreeVector& u) {
  check_velocity(u);
  const double u2 = u.squaredNorm();
  ThreeVector par = ThreeVector::Zero();
  if (u2 > 0.0) par = (a.vec().dot(u) / u2) * u;
  const ThreeVector perp = a.vec() - par;
  const ThreeVector dir = std::sqrt(1.0 - u2) * perp + par;
  const double denom = std::sqrt(1.0 - a.vec().cross(u).squaredNorm());
  return {a, u, sigma_dot(dir) / denom};
}

double czachor_correlator(const UnitVector& a, const UnitVector& b, const ThreeVector& u) {
  check_velocity(u);
  const double u2 = u.squaredNorm();
  ThreeVector a_perp = a.vec();
  ThreeVector b_perp = b.vec();
  if (u2 > 0.0) {
    a_perp -= (a.vec().dot(u) / u2) * u;
    b_perp -= (b.vec().dot(u) / u2) * u;
  }
  const double num = a.dot(b) - u2 * a_perp.dot(b_perp);
  const double den = std::sqrt(1.0 - a.vec().cross(u).squaredNorm()) * std::sqrt(1.0 - b.vec().cross(u).squaredNorm());
  return -num / den;
}

Complex czachor_correlator_two_qubit(const UnitVector& a, const UnitVector& b, const ThreeVector& u) {
  const Matrix2 ma = czachor_observable(a, u).matrix;
  const Matrix2 mb = czachor_observable(b, u).matrix;
  Eigen::Matrix4cd joint;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) joint.block<2, 2>(2 * i, 2 * k) = ma(i, k) * mb;
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd singlet(0.0, h, -h, 0.0);
  return singlet.dot(joint * singlet);
}

}  // namespace relbell
