// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (1..10)

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relbell/bell.hpp"
#include "relbell/sampling.hpp"

using namespace relbell;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

struct Outcome {
  bool passed;
  std::string detail;
};

class Worst {
 public:
  void add(double r) { worst_ = std::isnan(r) ? r : std::max(worst_, r); }
  double value() const { return worst_; }
  bool within(double tol) const { return worst_ <= tol; }

 private:
  double worst_ = 0.0;
};

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(12);
  s << std::fixed << x;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json load_fixture() {
  std::ifstream f(std::string(RELBELL_FIXTURE_DIR) + "/czachor_oracle.json");
  if (!f) throw std::runtime_error("missing czachor_oracle.json fixture");
  return nlohmann::json::parse(f);
}

Outcome algebra() {
  const auto t0 = std::chrono::steady_clock::now();
  Worst w;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const Matrix4 anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      w.add(max_abs_diff(anti, (mu == nu ? 2.0 * metric(mu) : 0.0) * Matrix4::Identity()));
    }
  for (int mu = 0; mu < 4; ++mu) w.add((gamma5() * gamma(mu) + gamma(mu) * gamma5()).cwiseAbs().maxCoeff());
  const double t = seconds_since(t0);
  return {w.value() < 1e-14 && t < 1.0, "residual " + sci(w.value()) + " < 1e-14, runtime " + sci(t) + " s < 1 s"};
}

Outcome spinors() {
  Sampler rng(1001);
  Worst norm, dirac;
  for (double beta : {0.0, 0.3, 0.6, 0.9, 0.99, 0.999})
    for (int k = 0; k < 20; ++k) {
      const BoostParams b(beta, rng.direction(), rng.uniform(0.5, 3.0));
      const auto [up, down] = positive_energy_projector_basis(b);
      const Matrix4 ps = slash(four_momentum(b));
      norm.add(std::abs(up.squaredNorm() - 1.0));
      norm.add(std::abs(down.squaredNorm() - 1.0));
      norm.add(std::abs(up.dot(down)));
      dirac.add((ps * up - b.mass() * up).norm() / (b.mass() * up.norm()));
      dirac.add((ps * down - b.mass() * down).norm() / (b.mass() * down.norm()));
    }
  return {norm.within(1e-12) && dirac.within(1e-10),
          "orthonormality " + sci(norm.value()) + " < 1e-12, Dirac eq (relative) " + sci(dirac.value()) + " < 1e-10"};
}

Outcome polarization() {
  Sampler rng(1002);
  Worst w, boost;
  for (int k = 0; k < 200; ++k) {
    const BoostParams b = rng.boost(std::array<double, 4>{0.0, 0.5, 0.9, 0.999});
    const UnitVector n = rng.direction();
    const FourVector s = polarization_vector(n, b);
    w.add(std::abs(minkowski_dot(s, s) + 1.0));
    w.add(std::abs(minkowski_dot(s, four_momentum(b))));
    const FourVector bs = boost_four_vector(FourVector(0.0, n.vec()), b);
    for (int mu = 0; mu < 4; ++mu) boost.add(std::abs(bs[mu] - s[mu]));
  }
  return {w.within(1e-9) && boost.within(1e-10),
          "s.s+1, s.p " + sci(w.value()) + " < 1e-9, boost vs closed form " + sci(boost.value()) + " < 1e-10"};
}

Outcome pauli_lubanski_consistency() {
  Sampler rng(1003);
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const BoostParams b = rng.boost(0.999);
    const FourVector s = polarization_vector(rng.direction(), b);
    const Matrix4 ws = (2.0 / b.mass()) * contract(pauli_lubanski(four_momentum(b)), s);
    const Matrix4 g5s = gamma5() * slash(s);
    for (SpinLabel l : {SpinLabel::Up, SpinLabel::Down}) {
      const Spinor u = boosted_spinor(b, l);
      w.add((ws * u - g5s * u).cwiseAbs().maxCoeff());
    }
  }
  return {w.within(1e-10), "(2/m)(W.s)u - gamma5 sslash u: " + sci(w.value()) + " < 1e-10"};
}

Outcome closed_forms() {
  Sampler rng(1004);
  Worst expect, elements, sandwich;
  for (int k = 0; k < 100; ++k) {
    const BoostParams b = rng.boost(0.999);
    const UnitVector n = rng.direction();
    const SpinLabel l = k % 2 ? SpinLabel::Up : SpinLabel::Down;
    const Spinor u = boosted_spinor(b, l);
    expect.add(std::abs(expectation_closed_form(n, b, l) - u.dot(gamma5_slash(n, b) * u).real()));
  }
  for (int k = 0; k < 50; ++k) {
    const BoostParams b(rng.uniform(0.0, 0.999), UnitVector::z(), rng.uniform(0.5, 3.0));
    const UnitVector n = rng.direction();
    for (SpinLabel r : {SpinLabel::Up, SpinLabel::Down})
      for (SpinLabel c : {SpinLabel::Up, SpinLabel::Down})
        elements.add(std::abs(matrix_element_closed_form(r, c, n, b) - matrix_element(r, c, n, b)));
  }
  for (int k = 0; k < 50; ++k) {
    const ThreeVector p(0.0, 0.0, rng.uniform(-2.0, 2.0));
    const ThreeVector s(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto [lhs, rhs] = sigma_sandwich_identity(p, s);
    sandwich.add(max_abs_diff(lhs, rhs));
  }
  return {expect.within(1e-12) && elements.within(1e-12) && sandwich.within(1e-12),
          "expectation " + sci(expect.value()) + ", elements " + sci(elements.value()) + ", sandwich " +
              sci(sandwich.value()) + " (all < 1e-12)"};
}

Outcome invariance() {
  Sampler rng(1006);
  const std::array<double, 10> speeds{0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99, 0.995, 0.999};
  Worst w;
  for (int k = 0; k < 100; ++k) {
    const UnitVector a = rng.direction(), b = rng.direction();
    for (double beta : speeds) {
      const BoostParams boost(beta, rng.direction(), rng.uniform(0.5, 3.0));
      w.add(std::abs(correlator(a, b, boost) + a.dot(b)));
    }
  }
  return {w.within(1e-9), "max |E(a,b) + a.b| = " + sci(w.value()) + " < 1e-9"};
}

Outcome chsh_maximum() {
  Worst w;
  bool converged = true;
  std::string values;
  for (double beta : {0.0, 0.5, 0.9, 0.99}) {
    const ChshResult r = chsh_maximize(BoostParams(beta, UnitVector::normalize({0.3, -0.2, 1.0})),
                                       OperatorKind::PauliLubanski, OptimizerConfig{});
    w.add(std::abs(r.value - kTsirelson));
    converged = converged && r.converged;
    values += " " + fixed(r.value);
  }
  return {w.within(1e-6) && converged, "max values" + values + "; |max - 2 sqrt 2| " + sci(w.value()) + " < 1e-6"};
}

Outcome czachor_contrast() {
  const nlohmann::json fixture = load_fixture();
  Sampler rng(1008);
  Worst closed;
  for (int k = 0; k < 100; ++k) {
    const UnitVector a = rng.direction(), b = rng.direction();
    const ThreeVector u = rng.uniform(0.0, 0.999) * rng.direction().vec();
    closed.add(std::abs(czachor_correlator(a, b, u) - czachor_correlator_two_qubit(a, b, u).real()));
  }
  const bool closed_ok = closed.within(1e-12);

  const ChshResult rest = chsh_maximize(BoostParams::rest(), OperatorKind::Czachor, OptimizerConfig{},
                                        PlaneRestriction::BoostPlane);
  const bool rest_ok = std::abs(rest.value - kTsirelson) < 1e-6;

  const ChshResult fast = chsh_maximize(BoostParams(0.9, UnitVector::z()), OperatorKind::Czachor, OptimizerConfig{},
                                        PlaneRestriction::BoostPlane);
  const double grid = fixture.at("plane_grid_1deg_beta_0.9").get<double>();
  // The optimum cannot lie below the grid maximum; 1e-4 bounds a 1 degree grid's shortfall.
  const bool pinned = fast.value >= grid - 1e-9 && fast.value - grid < 1e-4;
  const bool below = kTsirelson - fast.value > 1e-6;

  std::cout << "    8a closed form vs two-qubit: " << sci(closed.value()) << " < 1e-12 " << (closed_ok ? "ok" : "FAIL")
            << "\n    8b in-plane max at beta=0: " << fixed(rest.value) << " " << (rest_ok ? "ok" : "FAIL")
            << "\n    8c in-plane max at beta=0.9: " << fixed(fast.value) << ", 1-degree grid oracle " << fixed(grid)
            << (pinned ? " (consistent)" : " (INCONSISTENT)") << ", 2 sqrt 2 - max = " << sci(kTsirelson - fast.value)
            << (below ? " > 1e-6 ok" : " not > 1e-6 FAIL") << '\n';
  return {closed_ok && rest_ok && pinned && below, "closed form, rest max, in-plane max strictly below 2 sqrt 2 at 0.9"};
}

Outcome tsirelson() {
  Sampler rng(1009);
  double worst = -1.0;
  for (int k = 0; k < 10000; ++k) {
    const MeasurementSettings s{rng.direction(), rng.direction(), rng.direction(), rng.direction()};
    worst = std::max(worst, chsh_value(s, rng.boost(0.999), OperatorKind::PauliLubanski));
  }
  return {worst <= kTsirelson + 1e-9, "largest of 1e4 random values " + fixed(worst) + " <= 2 sqrt 2 + 1e-9"};
}

Outcome end_to_end() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "relbell_acceptance";
  fs::create_directories(dir);
  const std::string exe = RELBELL_CLI_PATH;
  std::array<std::string, 2> bodies;
  double slowest = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const fs::path out = dir / ("scan" + std::to_string(i) + ".csv");
    fs::remove(out);
    const std::string cmd = exe + " chsh-scan --beta-grid 0:0.99:0.11 --operator both --seed 42 --out " + out.string();
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = std::system(cmd.c_str());
    slowest = std::max(slowest, seconds_since(t0));
    if (rc != 0) return {false, "chsh-scan exited with status " + std::to_string(rc)};
    std::ifstream f(out, std::ios::binary);
    bodies[i].assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  const auto rows = std::count(bodies[0].begin(), bodies[0].end(), '\n');
  const bool same = !bodies[0].empty() && bodies[0] == bodies[1];
  return {same && slowest < 30.0 && rows == 21,
          std::to_string(rows - 1) + " rows, byte-identical: " + (same ? "yes" : "no") + ", slowest run " +
              sci(slowest) + " s < 30 s"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "gamma algebra", algebra},
      {2, "spinor suite", spinors},
      {3, "polarization suite", polarization},
      {4, "Pauli-Lubanski consistency", pauli_lubanski_consistency},
      {5, "closed-form oracles", closed_forms},
      {6, "boost-invariant correlator", invariance},
      {7, "CHSH maximum 2 sqrt 2", chsh_maximum},
      {8, "Czachor contrast", czachor_contrast},
      {9, "Tsirelson bound", tsirelson},
      {10, "chsh-scan end to end", end_to_end},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "C" << c.id << " " << c.name << ": " << o.detail << std::endl;
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
