#include "relbell/dirac.hpp"

#include <stdexcept>
#include <string>

namespace relbell {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_index(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("Lorentz index " + std::to_string(mu) + " not in 0..3");
}

Matrix4 blocks(const Matrix2& tl, const Matrix2& tr, const Matrix2& bl, const Matrix2& br) {
  Matrix4 m;
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

Matrix2 pauli(int k) {
  Matrix2 s;
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("Pauli index " + std::to_string(k) + " not in 0..3");
  }
  return s;
}

Matrix2 sigma_dot(const ThreeVector& v) { return v[0] * pauli(1) + v[1] * pauli(2) + v[2] * pauli(3); }

Matrix4 gamma(int mu) {
  check_index(mu);
  const Matrix2 one = Matrix2::Identity();
  const Matrix2 zero = Matrix2::Zero();
  if (mu == 0) return blocks(one, zero, zero, -one);
  const Matrix2 s = pauli(mu);
  return blocks(zero, s, -s, zero);
}

Matrix4 gamma5() {
  const Matrix2 one = Matrix2::Identity();
  const Matrix2 zero = Matrix2::Zero();
  return blocks(zero, one, one, zero);
}

Matrix4 slash(const FourVector& v) {
  Matrix4 out = Matrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) out += v.lower(mu) * gamma(mu);
  return out;
}

Matrix4 sigma_mu_nu(int mu, int nu) {
  const Matrix4 gm = metric(mu) * gamma(mu);
  const Matrix4 gn = metric(nu) * gamma(nu);
  return (kI / 2.0) * (gm * gn - gn * gm);
}

Matrix4 big_sigma(int k) {
  const Matrix2 s = pauli(k);
  return blocks(s, Matrix2::Zero(), Matrix2::Zero(), s);
}

int levi_civita(int mu, int nu, int rho, int sigma) {
  const std::array<int, 4> idx{mu, nu, rho, sigma};
  for (int i : idx) check_index(i);
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

std::array<Matrix4, 4> pauli_lubanski(const FourVector& p) {
  std::array<Matrix4, 4> w;
  for (auto& m : w) m.setZero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        if (rho == nu || nu == mu || rho == mu) continue;
        const Matrix4 s = sigma_mu_nu(nu, rho);
        for (int sg = 0; sg < 4; ++sg) {
          const int eps = levi_civita(mu, nu, rho, sg);
          if (eps != 0) w[static_cast<std::size_t>(mu)] += (0.25 * eps * p.lower(sg)) * s;
        }
      }
  return w;
}

Matrix4 contract(const std::array<Matrix4, 4>& w, const FourVector& s) {
  Matrix4 out = Matrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) out += s.lower(mu) * w[static_cast<std::size_t>(mu)];
  return out;
}

Matrix16 tensor_product(const Matrix4& a, const Matrix4& b) {
  Matrix16 out;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out.block<4, 4>(4 * i, 4 * k) = a(i, k) * b;
  return out;
}

}  // namespace relbell
