#include <doctest.h>

#include <array>
#include <cmath>

#include "relbell/minkowski.hpp"
#include "relbell/sampling.hpp"

using namespace relbell;

namespace {

bool close4(const FourVector& a, const FourVector& b, double tol) {
  for (int mu = 0; mu < 4; ++mu)
    if (std::abs(a[mu] - b[mu]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("minkowski_dot uses the (+,-,-,-) metric") {
  CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
  CHECK(minkowski_dot({0, 0, 0, 1}, {0, 0, 0, 1}) == -1.0);
  CHECK(minkowski_dot({2, 1, 3, -1}, {1, 4, 0.5, 2}) == 2.0 - 4.0 - 1.5 + 2.0);
}

TEST_CASE("minkowski_dot is symmetric and bilinear") {
  Sampler rng(11);
  auto rv = [&] { return FourVector(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)); };
  for (int k = 0; k < 100; ++k) {
    const FourVector x = rv(), y = rv(), z = rv();
    const double a = rng.uniform(-3, 3);
    CHECK(minkowski_dot(x, y) == minkowski_dot(y, x));
    CHECK(std::abs(minkowski_dot(a * x + y, z) - (a * minkowski_dot(x, z) + minkowski_dot(y, z))) < 1e-12 * 100);
  }
}

TEST_CASE("four_momentum") {
  SUBCASE("rest frame") { CHECK(close4(four_momentum(BoostParams::rest()), {1, 0, 0, 0}, 0)); }
  SUBCASE("beta 0.6 along z") { CHECK(close4(four_momentum(BoostParams(0.6, UnitVector::z(), 1.0)), {1.25, 0, 0, 0.75}, 1e-14)); }
  SUBCASE("beta 0.8 along x, m = 2") {
    CHECK(close4(four_momentum(BoostParams(0.8, UnitVector::x(), 2.0)), {10.0 / 3, 8.0 / 3, 0, 0}, 1e-14));
  }
  SUBCASE("mass shell") {
    Sampler rng(3);
    for (int k = 0; k < 100; ++k) {
      const BoostParams b = rng.boost(0.999999);
      const FourVector p = four_momentum(b);
      CHECK(std::abs(minkowski_dot(p, p) - b.mass() * b.mass()) <= 1e-10 * b.gamma() * b.gamma());
    }
  }
}

TEST_CASE("BoostParams validates its range") {
  CHECK_THROWS_AS(BoostParams(1.0, UnitVector::z()), std::domain_error);
  CHECK_THROWS_AS(BoostParams(0.9999991, UnitVector::z()), std::domain_error);
  CHECK_THROWS_AS(BoostParams(-0.1, UnitVector::z()), std::domain_error);
  CHECK_THROWS_AS(BoostParams(0.5, UnitVector::z(), 0.0), std::invalid_argument);
  CHECK_NOTHROW(BoostParams(kBetaMax, UnitVector::z()));
  CHECK(BoostParams(0.6, UnitVector::z()).gamma() == doctest::Approx(1.25).epsilon(1e-15));
  CHECK_THROWS_AS(UnitVector::normalize(ThreeVector::Zero()), std::invalid_argument);
  CHECK_THROWS_AS(UnitVector::checked(ThreeVector(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("polarization_vector") {
  SUBCASE("rest limit is (0, n)") {
    CHECK(close4(polarization_vector(UnitVector::z(), BoostParams::rest()), {0, 0, 0, 1}, 0));
  }
  SUBCASE("longitudinal, beta 0.6") {
    CHECK(close4(polarization_vector(UnitVector::z(), BoostParams(0.6, UnitVector::z())), {0.75, 0, 0, 1.25}, 1e-14));
  }
  SUBCASE("transverse direction is untouched") {
    for (double beta : {0.1, 0.6, 0.99, 0.999999})
      CHECK(close4(polarization_vector(UnitVector::x(), BoostParams(beta, UnitVector::z())), {0, 1, 0, 0}, 0));
  }
  SUBCASE("spacelike unit and orthogonal to p") {
    Sampler rng(5);
    const std::array<double, 4> speeds{0.0, 0.5, 0.9, 0.999};
    for (int k = 0; k < 200; ++k) {
      const BoostParams b = rng.boost(speeds);
      const FourVector s = polarization_vector(rng.direction(), b);
      CHECK(std::abs(minkowski_dot(s, s) + 1.0) < 1e-9);
      CHECK(std::abs(minkowski_dot(s, four_momentum(b))) < 1e-9);
    }
  }
}

TEST_CASE("boost_four_vector") {
  const BoostParams b(0.6, UnitVector::z());
  CHECK(close4(boost_four_vector({0.3, 1, -2, 4}, BoostParams::rest()), {0.3, 1, -2, 4}, 0));
  CHECK(close4(boost_four_vector({0, 0, 0, 1}, b), {0.75, 0, 0, 1.25}, 1e-14));
  CHECK(close4(boost_four_vector({1, 0, 0, 0}, b), {1.25, 0, 0, 0.75}, 1e-14));

  Sampler rng(9);
  for (int k = 0; k < 200; ++k) {
    const BoostParams bb = rng.boost(0.999);
    const UnitVector n = rng.direction();
    CHECK(close4(boost_four_vector(FourVector(0.0, n.vec()), bb), polarization_vector(n, bb), 1e-10));
    const FourVector v(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const FourVector w = boost_four_vector(v, bb);
    CHECK(std::abs(minkowski_dot(w, w) - minkowski_dot(v, v)) <= 1e-10 * bb.gamma() * bb.gamma());
    CHECK(close4(boost_four_vector(FourVector(bb.mass(), 0, 0, 0), bb), four_momentum(bb), 1e-10 * bb.gamma()));
  }
}
