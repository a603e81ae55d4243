#include "relbell/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace relbell {

namespace {

using Point = std::vector<double>;

Point affine(const Point& base, const Point& toward, double t) {
  Point out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

double diameter(const std::vector<Point>& simplex) {
  double d = 0.0;
  for (std::size_t k = 1; k < simplex.size(); ++k)
    for (std::size_t i = 0; i < simplex[0].size(); ++i) d = std::max(d, std::abs(simplex[k][i] - simplex[0][i]));
  return d;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start, const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead needs at least one parameter");

  std::vector<Point> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) values[k] = f(simplex[k]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;
  for (result.iterations = 0; result.iterations < opts.max_iterations; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> s(n + 1);
      std::vector<double> v(n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        s[k] = std::move(simplex[order[k]]);
        v[k] = values[order[k]];
      }
      simplex = std::move(s);
      values = std::move(v);
    }

    if (values[n] - values[0] <= opts.value_tol && diameter(simplex) <= opts.size_tol) {
      result.converged = true;
      break;
    }

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);

    const Point reflected = affine(centroid, simplex[n], -1.0);
    const double fr = f(reflected);
    if (fr < values[0]) {
      const Point expanded = affine(centroid, simplex[n], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
      continue;
    }
    if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
      continue;
    }
    const bool outside = fr < values[n];
    const Point contracted = outside ? affine(centroid, reflected, 0.5) : affine(centroid, simplex[n], 0.5);
    const double fc = f(contracted);
    if (fc < std::min(fr, values[n])) {
      simplex[n] = contracted;
      values[n] = fc;
      continue;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      simplex[k] = affine(simplex[0], simplex[k], 0.5);
      values[k] = f(simplex[k]);
    }
  }

  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

std::vector<std::vector<double>> shifted_halton(int count, int dim, std::uint64_t seed) {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (dim < 1 || dim > static_cast<int>(std::size(kPrimes))) throw std::invalid_argument("halton dimension out of range");
  std::mt19937_64 rng(seed);
  std::vector<double> shift(static_cast<std::size_t>(dim));
  for (auto& s : shift) s = static_cast<double>(rng() >> 11) * 0x1.0p-53;

  std::vector<std::vector<double>> points(static_cast<std::size_t>(count), std::vector<double>(static_cast<std::size_t>(dim)));
  for (int k = 0; k < count; ++k)
    for (int d = 0; d < dim; ++d) {
      const int base = kPrimes[d];
      double value = 0.0;
      double scale = 1.0 / base;
      for (int i = k + 1; i > 0; i /= base, scale /= base) value += (i % base) * scale;
      value += shift[static_cast<std::size_t>(d)];
      points[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)] = value - std::floor(value);
    }
  return points;
}

}  // namespace relbell
