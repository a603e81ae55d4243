#include "relbell/bell.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "relbell/optimize.hpp"

namespace relbell {

namespace {

TwoParticleState kron(const Spinor& x, const Spinor& y) {
  TwoParticleState out;
  for (int i = 0; i < 4; ++i) out.segment<4>(4 * i) = x[i] * y;
  return out;
}

double quadratic_real(const TwoParticleState& psi, const Matrix16& op) {
  const Complex v = psi.dot(op * psi);
  if (std::abs(v.imag()) > 1e-10) throw std::logic_error("correlator has a non-vanishing imaginary part");
  return v.real();
}

/// Caches the boost-dependent pieces of a CHSH evaluation.
class ChshEvaluator {
 public:
  ChshEvaluator(const BoostParams& boost, OperatorKind kind)
      : boost_(boost), kind_(kind), psi_(bell_state(boost)) {}

  double correlation(const UnitVector& a, const UnitVector& b) const {
    if (kind_ == OperatorKind::Czachor) return czachor_correlator(a, b, boost_.velocity());
    const Matrix16 op = tensor_product(spin_observable(a, boost_).matrix, spin_observable(b, boost_).matrix);
    return quadratic_real(psi_, op);
  }

  std::array<double, 4> correlators(const MeasurementSettings& s) const {
    return {correlation(s.a, s.b), correlation(s.a_prime, s.b), correlation(s.a, s.b_prime),
            correlation(s.a_prime, s.b_prime)};
  }

  double value(const MeasurementSettings& s) const {
    const auto e = correlators(s);
    return std::abs(e[0] + e[1] + e[2] - e[3]);
  }

 private:
  BoostParams boost_;
  OperatorKind kind_;
  TwoParticleState psi_;
};

/// Maps optimizer parameters to settings: 8 spherical angles, or 4 planar
/// angles (radians) in the boost plane.
class SettingsMap {
 public:
  SettingsMap(PlaneRestriction restriction, const UnitVector& boost_dir)
      : restriction_(restriction), plane_(boost_plane(boost_dir)) {}

  int dimension() const { return restriction_ == PlaneRestriction::None ? 8 : 4; }

  MeasurementSettings operator()(std::span<const double> x) const {
    if (restriction_ == PlaneRestriction::None)
      return {UnitVector::spherical(x[0], x[1]), UnitVector::spherical(x[2], x[3]), UnitVector::spherical(x[4], x[5]),
              UnitVector::spherical(x[6], x[7])};
    return {in_plane(x[0]), in_plane(x[1]), in_plane(x[2]), in_plane(x[3])};
  }

  /// Scales a unit-cube point to the angle domain.
  std::vector<double> from_unit_cube(const std::vector<double>& u) const {
    std::vector<double> x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
      const bool polar = restriction_ == PlaneRestriction::None && i % 2 == 0;
      x[i] = u[i] * (polar ? std::numbers::pi : 2.0 * std::numbers::pi);
    }
    return x;
  }

 private:
  UnitVector in_plane(double theta) const {
    return UnitVector::normalize(std::cos(theta) * plane_.first.vec() + std::sin(theta) * plane_.second.vec());
  }

  PlaneRestriction restriction_;
  std::pair<UnitVector, UnitVector> plane_;
};

struct StartOutcome {
  NelderMeadResult refined;
  bool converged = false;
  int iterations = 0;
};

}  // namespace

TwoParticleState bell_state(const BoostParams& boost) {
  const auto [up, down] = positive_energy_projector_basis(boost);
  return (kron(up, down) - kron(down, up)) / std::sqrt(2.0);
}

TwoParticleState swap_particles(const TwoParticleState& psi) {
  TwoParticleState out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * j + i] = psi[4 * i + j];
  return out;
}

Complex correlator_complex(const UnitVector& a, const UnitVector& b, const BoostParams& boost) {
  const TwoParticleState psi = bell_state(boost);
  const Matrix16 op = tensor_product(spin_observable(a, boost).matrix, spin_observable(b, boost).matrix);
  return psi.dot(op * psi);
}

double correlator(const UnitVector& a, const UnitVector& b, const BoostParams& boost) {
  const TwoParticleState psi = bell_state(boost);
  return quadratic_real(psi, tensor_product(spin_observable(a, boost).matrix, spin_observable(b, boost).matrix));
}

std::string_view to_string(OperatorKind kind) {
  return kind == OperatorKind::PauliLubanski ? "pauli_lubanski" : "czachor";
}

std::string_view to_string(PlaneRestriction restriction) {
  return restriction == PlaneRestriction::None ? "none" : "boost_plane";
}

std::pair<UnitVector, UnitVector> boost_plane(const UnitVector& boost_dir) {
  const ThreeVector d = boost_dir.vec();
  ThreeVector ref = ThreeVector::UnitX();
  if (std::abs(d.dot(ref)) > 0.9) ref = ThreeVector::UnitZ();
  return {boost_dir, UnitVector::normalize(ref - d.dot(ref) * d)};
}

UnitVector planar_direction(const std::pair<UnitVector, UnitVector>& plane, double theta_deg) {
  const double t = theta_deg * std::numbers::pi / 180.0;
  return UnitVector::normalize(std::cos(t) * plane.first.vec() + std::sin(t) * plane.second.vec());
}

MeasurementSettings canonical_settings(const std::pair<UnitVector, UnitVector>& plane) {
  return {planar_direction(plane, 0.0), planar_direction(plane, 90.0), planar_direction(plane, 45.0),
          planar_direction(plane, -45.0)};
}

std::array<double, 4> chsh_correlators(const MeasurementSettings& s, const BoostParams& boost, OperatorKind kind) {
  return ChshEvaluator(boost, kind).correlators(s);
}

double chsh_value(const MeasurementSettings& s, const BoostParams& boost, OperatorKind kind) {
  return ChshEvaluator(boost, kind).value(s);
}

ChshResult chsh_maximize(const BoostParams& boost, OperatorKind kind, const OptimizerConfig& config,
                         PlaneRestriction restriction) {
  if (config.starts < 1) throw std::invalid_argument("optimizer needs at least one start");
  if (!(config.tol > 0.0)) throw std::invalid_argument("optimizer tolerance must be positive");

  const ChshEvaluator eval(boost, kind);
  const SettingsMap map(restriction, boost.direction());
  const Objective objective = [&](std::span<const double> x) { return -eval.value(map(x)); };

  NelderMeadOptions opts;
  opts.value_tol = config.tol;
  opts.max_iterations = config.max_iterations;

  const auto seeds = shifted_halton(config.starts, map.dimension(), config.seed);
  auto run_start = [&](std::size_t k) {
    StartOutcome out;
    const NelderMeadResult first = nelder_mead(objective, map.from_unit_cube(seeds[k]), opts);
    NelderMeadOptions restart = opts;
    restart.initial_step = 0.05;
    out.refined = nelder_mead(objective, first.x, restart);
    out.iterations = first.iterations + out.refined.iterations;
    out.converged = first.converged && out.refined.converged && std::abs(first.value - out.refined.value) < config.tol;
    if (first.value < out.refined.value) out.refined = first;
    return out;
  };

  std::vector<StartOutcome> outcomes(seeds.size());
  if (config.parallel) {
    std::vector<std::future<StartOutcome>> jobs;
    jobs.reserve(seeds.size());
    for (std::size_t k = 0; k < seeds.size(); ++k) jobs.push_back(std::async(std::launch::async, run_start, k));
    for (std::size_t k = 0; k < seeds.size(); ++k) outcomes[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < seeds.size(); ++k) outcomes[k] = run_start(k);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k)
    if (outcomes[k].refined.value < outcomes[best].refined.value) best = k;

  const StartOutcome& win = outcomes[best];
  const MeasurementSettings settings = map(win.refined.x);
  return {eval.value(settings), settings, kind, restriction, boost, win.iterations, win.converged};
}

std::vector<ChshResult> chsh_boost_sweep(OperatorKind kind, std::span<const double> betas, const UnitVector& direction,
                                         double mass, PlaneRestriction restriction, const OptimizerConfig& config) {
  std::vector<ChshResult> out;
  out.reserve(betas.size());
  for (double beta : betas) out.push_back(chsh_maximize(BoostParams(beta, direction, mass), kind, config, restriction));
  return out;
}

}  // namespace relbell
