#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace relbell {

struct NelderMeadOptions {
  double initial_step = 0.5;
  /// Stop when the simplex value spread drops below this.
  double value_tol = 1e-9;
  /// ... and the simplex diameter drops below this.
  double size_tol = 1e-7;
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes f from `start` with the standard Nelder-Mead moves
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& opts);

/// Points of the Halton sequence in [0,1)^dim, rotated by a seed-derived
/// Cranley-Patterson shift. Deterministic across platforms.
std::vector<std::vector<double>> shifted_halton(int count, int dim, std::uint64_t seed);

}  // namespace relbell
