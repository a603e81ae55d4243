#pragma once

#include <utility>

#include "relbell/spinors.hpp"

namespace relbell {

/// Relativistic spin projection along n for a particle boosted by `boost`.
///
/// `matrix` is (1/m) gamma5 sslash pslash with s = polarization_vector(n, boost).
/// On positive-energy spinors pslash u = m u, so it acts exactly as gamma5 sslash
/// there; at rest it reduces to Sigma.n on the whole space. The full 4x4 is not
/// Hermitian away from rest, only its positive-energy restriction is.
struct SpinObservable {
  UnitVector direction;
  BoostParams boost;
  FourVector polarization;
  Matrix4 matrix;
};

SpinObservable spin_observable(const UnitVector& n, const BoostParams& boost);

/// Bare gamma5 sslash for the boosted polarization of n.
Matrix4 gamma5_slash(const UnitVector& n, const BoostParams& boost);

/// Sigma.n = diag(sigma.n, sigma.n).
Matrix4 rest_spin_operator(const UnitVector& n);

/// u^dagger (gamma5 sslash) u evaluated through the two-component formula
///   (E+m)/(2E) [phi^dagger (sigma.s) phi - phi^dagger (sigma.p)(sigma.s)(sigma.p) phi / (E+m)^2].
double expectation_closed_form(const UnitVector& n, const BoostParams& boost, SpinLabel spin);

/// Closed-form elements u(p,row)^dagger gamma5 sslash u(p,col) for p along +z:
/// (+,+) = s_z/gamma, (-,-) = -s_z/gamma, (+,-) = s_x - i s_y, (-,+) = s_x + i s_y.
/// Throws std::invalid_argument for a moving boost not along +z.
Complex matrix_element_closed_form(SpinLabel row, SpinLabel col, const UnitVector& n, const BoostParams& boost);

/// Numeric element u(p,row)^dagger gamma5 sslash u(p,col), any boost direction.
Complex matrix_element(SpinLabel row, SpinLabel col, const UnitVector& n, const BoostParams& boost);

/// Restriction of the spin observable to span{u(p,+1/2), u(p,-1/2)}.
/// Equals sigma.n for every boost.
Matrix2 effective_two_by_two(const UnitVector& n, const BoostParams& boost);

/// ((sigma.p)(sigma.s)(sigma.p), |p|^2 (s_z sigma_z - s_y sigma_y - s_x sigma_x)).
/// The two agree only for p along z.
std::pair<Matrix2, Matrix2> sigma_sandwich_identity(const ThreeVector& p, const ThreeVector& s);

/// Velocity-dependent spin projection built from the center-of-mass operator:
///   ((sqrt(1-u^2) a_perp + a_par) . sigma) / sqrt(1 - |a x u|^2).
struct CzachorObservable {
  UnitVector direction;
  ThreeVector velocity;
  Matrix2 matrix;
};

/// Throws std::domain_error if |u| >= 1.
CzachorObservable czachor_observable(const UnitVector& a, const ThreeVector& u);

/// Closed form -(a.b - u^2 a_perp.b_perp) / (sqrt(1-|a x u|^2) sqrt(1-|b x u|^2)).
double czachor_correlator(const UnitVector& a, const UnitVector& b, const ThreeVector& u);

/// <singlet| A (x) B |singlet> in the two-qubit space, singlet = (|+-> - |-+>)/sqrt(2).
Complex czachor_correlator_two_qubit(const UnitVector& a, const UnitVector& b, const ThreeVector& u);

}  // namespace relbell
