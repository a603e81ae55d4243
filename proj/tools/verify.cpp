#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "relbell/bell.hpp"
#include "relbell/sampling.hpp"

namespace relbell::cli {

namespace {

/// Tracks the worst residual of one check group.
class Worst {
 public:
  void add(double r) { worst_ = std::isnan(r) ? r : std::max(worst_, r); }
  double value() const { return worst_; }

 private:
  double worst_ = 0.0;
};

CheckResult make(std::string name, double residual, double tol) {
  return {std::move(name), residual, tol, residual <= tol};
}

constexpr std::array<double, 6> kSpinorSpeeds{0.0, 0.3, 0.6, 0.9, 0.99, 0.999};
constexpr std::array<double, 4> kPolarizationSpeeds{0.0, 0.5, 0.9, 0.999};

CheckResult check_algebra(bool fault) {
  std::array<Matrix4, 4> g;
  for (int mu = 0; mu < 4; ++mu) g[static_cast<std::size_t>(mu)] = gamma(mu);
  if (fault) g[2](0, 3) = -g[2](0, 3);
  Worst w;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const auto& a = g[static_cast<std::size_t>(mu)];
      const auto& b = g[static_cast<std::size_t>(nu)];
      const Matrix4 expected = (mu == nu ? 2.0 * metric(mu) : 0.0) * Matrix4::Identity();
      w.add(max_abs_diff(a * b + b * a, expected));
    }
  for (const auto& a : g) w.add((gamma5() * a + a * gamma5()).cwiseAbs().maxCoeff());
  return make("gamma_algebra", w.value(), 1e-14);
}

void check_spinors(Sampler& rng, std::vector<CheckResult>& out) {
  Worst norm;
  Worst dirac;
  for (double beta : kSpinorSpeeds)
    for (int k = 0; k < 20; ++k) {
      const BoostParams b(beta, rng.direction(), rng.uniform(0.5, 3.0));
      const auto [up, down] = positive_energy_projector_basis(b);
      const Matrix4 ps = slash(four_momentum(b));
      norm.add(std::abs(up.squaredNorm() - 1.0));
      norm.add(std::abs(down.squaredNorm() - 1.0));
      norm.add(std::abs(up.dot(down)));
      dirac.add((ps * up - b.mass() * up).norm() / b.mass());
      dirac.add((ps * down - b.mass() * down).norm() / b.mass());
    }
  out.push_back(make("spinor_orthonormality", norm.value(), 1e-12));
  out.push_back(make("dirac_equation", dirac.value(), 1e-10));
}

void check_polarization(Sampler& rng, std::vector<CheckResult>& out) {
  Worst w;
  Worst boost;
  for (int k = 0; k < 200; ++k) {
    const BoostParams b = rng.boost(kPolarizationSpeeds);
    const UnitVector n = rng.direction();
    const FourVector s = polarization_vector(n, b);
    const FourVector p = four_momentum(b);
    w.add(std::abs(minkowski_dot(s, s) + 1.0));
    w.add(std::abs(minkowski_dot(s, p)));
    const FourVector boosted = boost_four_vector(FourVector(0.0, n.vec()), b);
    for (int mu = 0; mu < 4; ++mu) boost.add(std::abs(boosted[mu] - s[mu]));
  }
  out.push_back(make("polarization_vector", w.value(), 1e-9));
  out.push_back(make("boost_reproduces_polarization", boost.value(), 1e-10));
}

CheckResult check_pauli_lubanski(Sampler& rng) {
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const BoostParams b = rng.boost();
    const UnitVector n = rng.direction();
    const FourVector s = polarization_vector(n, b);
    const Matrix4 ws = (2.0 / b.mass()) * contract(pauli_lubanski(four_momentum(b)), s);
    const Matrix4 g5s = gamma5() * slash(s);
    for (SpinLabel l : {SpinLabel::Up, SpinLabel::Down}) {
      const Spinor u = boosted_spinor(b, l);
      w.add((ws * u - g5s * u).cwiseAbs().maxCoeff());
    }
  }
  return make("pauli_lubanski_consistency", w.value(), 1e-10);
}

CheckResult check_closed_forms(Sampler& rng) {
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const BoostParams b = rng.boost();
    const UnitVector n = rng.direction();
    const Matrix4 op = gamma5_slash(n, b);
    for (SpinLabel l : {SpinLabel::Up, SpinLabel::Down}) {
      const Spinor u = boosted_spinor(b, l);
      w.add(std::abs(expectation_closed_form(n, b, l) - u.dot(op * u).real()));
    }
  }
  for (int k = 0; k < 50; ++k) {
    const BoostParams b(rng.uniform(0.0, 0.999), UnitVector::z(), rng.uniform(0.5, 3.0));
    const UnitVector n = rng.direction();
    for (SpinLabel r : {SpinLabel::Up, SpinLabel::Down})
      for (SpinLabel c : {SpinLabel::Up, SpinLabel::Down})
        w.add(std::abs(matrix_element_closed_form(r, c, n, b) - matrix_element(r, c, n, b)));
    const ThreeVector p(0.0, 0.0, rng.uniform(-3.0, 3.0));
    const ThreeVector s(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto [lhs, rhs] = sigma_sandwich_identity(p, s);
    w.add(max_abs_diff(lhs, rhs) / std::max(1.0, p.squaredNorm()));
  }
  return make("closed_form_oracles", w.value(), 1e-12);
}

CheckResult check_effective_operator(Sampler& rng) {
  Worst w;
  for (int k = 0; k < 200; ++k) {
    const UnitVector n = rng.direction();
    const BoostParams b = rng.boost(std::array<double, 3>{0.5, 0.9, 0.999});
    w.add(max_abs_diff(effective_two_by_two(n, b), sigma_dot(n.vec())));
  }
  return make("effective_two_by_two", w.value(), 1e-10);
}

CheckResult check_invariance(Sampler& rng) {
  constexpr std::array<double, 10> speeds{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99, 0.995, 0.999};
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const UnitVector a = rng.direction();
    const UnitVector b = rng.direction();
    const UnitVector dir = rng.direction();
    for (double beta : speeds) {
      const Complex e = correlator_complex(a, b, BoostParams(beta, dir));
      w.add(std::abs(e.real() + a.dot(b)));
      w.add(std::abs(e.imag()));
    }
  }
  return make("correlator_boost_invariance", w.value(), 1e-9);
}

CheckResult check_czachor(Sampler& rng) {
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const UnitVector a = rng.direction();
    const UnitVector b = rng.direction();
    const ThreeVector u = rng.uniform(0.0, 0.999) * rng.direction().vec();
    w.add(std::abs(czachor_correlator(a, b, u) - czachor_correlator_two_qubit(a, b, u)));
    const Matrix2 m = czachor_observable(a, u).matrix;
    w.add(max_abs_diff(m, Matrix2(m.adjoint())));
    w.add(std::abs(m.trace()));
  }
  return make("czachor_closed_form", w.value(), 1e-12);
}

CheckResult check_tsirelson(Sampler& rng) {
  const double bound = 2.0 * std::sqrt(2.0);
  double excess = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const MeasurementSettings s{rng.direction(), rng.direction(), rng.direction(), rng.direction()};
    excess = std::max(excess, chsh_value(s, rng.boost(), OperatorKind::PauliLubanski) - bound);
  }
  return make("tsirelson_bound", excess, 1e-9);
}

CheckResult check_chsh_maximum() {
  const double bound = 2.0 * std::sqrt(2.0);
  Worst w;
  OptimizerConfig cfg;
  for (double beta : {0.0, 0.9}) {
    const ChshResult r = chsh_maximize(BoostParams(beta, UnitVector::z()), OperatorKind::PauliLubanski, cfg);
    w.add(std::abs(r.value - bound));
    if (!r.converged) w.add(1.0);
  }
  return make("chsh_maximum", w.value(), 1e-6);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  Sampler rng(opts.seed);
  std::vector<CheckResult> out;
  out.push_back(check_algebra(opts.inject_fault));
  check_spinors(rng, out);
  check_polarization(rng, out);
  out.push_back(check_pauli_lubanski(rng));
  out.push_back(check_closed_forms(rng));
  out.push_back(check_effective_operator(rng));
  out.push_back(check_invariance(rng));
  out.push_back(check_czachor(rng));
  out.push_back(check_tsirelson(rng));
  out.push_back(check_chsh_maximum());
  return out;
}

}  // namespace relbell::cli
