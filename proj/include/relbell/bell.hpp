#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "relbell/observables.hpp"

namespace relbell {

/// 16 amplitudes, index 4i+j with particle 1 the slow index.
using TwoParticleState = Eigen::Matrix<Complex, 16, 1>;

/// (u(p,+1/2) (x) u(p,-1/2) - u(p,-1/2) (x) u(p,+1/2)) / sqrt(2), both particles
/// sharing the same momentum. At rest this is the singlet of the first two
/// basis spinors.
TwoParticleState bell_state(const BoostParams& boost);

/// Exchanges particles 1 and 2.
TwoParticleState swap_particles(const TwoParticleState& psi);

/// <Psi| A (x) B |Psi> with A, B the relativistic spin observables along a, b,
/// computed as a 16-dimensional quadratic form.
Complex correlator_complex(const UnitVector& a, const UnitVector& b, const BoostParams& boost);

/// Real part of correlator_complex. Throws std::logic_error if the imaginary
/// part exceeds 1e-10.
double correlator(const UnitVector& a, const UnitVector& b, const BoostParams& boost);

enum class OperatorKind { PauliLubanski, Czachor };
enum class PlaneRestriction { None, BoostPlane };

std::string_view to_string(OperatorKind kind);
std::string_view to_string(PlaneRestriction restriction);

struct MeasurementSettings {
  UnitVector a;
  UnitVector a_prime;
  UnitVector b;
  UnitVector b_prime;
};

/// Orthonormal pair (d, e) spanning the plane that contains the boost direction d.
/// e is the part of x orthogonal to d, or of z when d is along x.
std::pair<UnitVector, UnitVector> boost_plane(const UnitVector& boost_dir);

/// Unit vector cos(theta) first + sin(theta) second (theta in degrees).
UnitVector planar_direction(const std::pair<UnitVector, UnitVector>& plane, double theta_deg);

/// Planar angles a = 0, a' = 90, b = 45, b' = -45 degrees: the settings
/// that reach 2 sqrt(2) for E = -a.b with the CHSH sign pattern below.
MeasurementSettings canonical_settings(const std::pair<UnitVector, UnitVector>& plane);

/// The four joint expectations E(a,b), E(a',b), E(a,b'), E(a',b').
std::array<double, 4> chsh_correlators(const MeasurementSettings& s, const BoostParams& boost, OperatorKind kind);

/// |E(a,b) + E(a',b) + E(a,b') - E(a',b')|. The Czachor kind uses velocity
/// boost.velocity().
double chsh_value(const MeasurementSettings& s, const BoostParams& boost, OperatorKind kind);

struct OptimizerConfig {
  std::uint64_t seed = 20240601;
  int starts = 16;
  double tol = 1e-9;
  int max_iterations = 5000;
  /// Run multistarts on worker threads. Results do not depend on this.
  bool parallel = true;
};

struct ChshResult {
  double value = 0.0;
  MeasurementSettings settings;
  OperatorKind kind;
  PlaneRestriction restriction;
  BoostParams boost;
  int iterations = 0;
  bool converged = false;
};

/// Maximizes chsh_value over the measurement directions: shifted Halton
/// multistart followed by Nelder-Mead refinement and one restart from the
/// best point. `converged` is set when the winning refinement met its
/// tolerances and the restart changed the value by less than config.tol.
ChshResult chsh_maximize(const BoostParams& boost, OperatorKind kind, const OptimizerConfig& config,
                         PlaneRestriction restriction = PlaneRestriction::None);

/// One chsh_maximize per beta, in grid order.
std::vector<ChshResult> chsh_boost_sweep(OperatorKind kind, std::span<const double> betas, const UnitVector& direction,
                                         double mass, PlaneRestriction restriction, const OptimizerConfig& config);

}  // namespace relbell
