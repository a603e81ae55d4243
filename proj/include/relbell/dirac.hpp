#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "relbell/minkowski.hpp"

/**
 * Gamma-matrix algebra in the Dirac representation.
 *
 *   gamma^0 = [[1, 0], [0, -1]],  gamma^i = [[0, sigma^i], [-sigma^i, 0]],
 *   gamma^5 = [[0, 1], [1, 0]]   (2x2 blocks).
 *
 * Upper indices throughout unless a function says otherwise. The Levi-Civita
 * symbol uses eps^{0123} = +1.
 */
namespace relbell {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;

/// Pauli matrix sigma^k for k = 1, 2, 3; k = 0 gives the identity.
Matrix2 pauli(int k);

/// sigma . v for a real three-vector.
Matrix2 sigma_dot(const ThreeVector& v);

/// gamma^mu, mu in 0..3. Throws std::out_of_range otherwise.
Matrix4 gamma(int mu);

Matrix4 gamma5();

/// Feynman slash v_mu gamma^mu = v^0 gamma^0 - v^i gamma^i.
Matrix4 slash(const FourVector& v);

/// sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu] with lowered indices.
Matrix4 sigma_mu_nu(int mu, int nu);

/// Block-diagonal spin matrix Sigma^k = diag(sigma^k, sigma^k), k = 1..3.
Matrix4 big_sigma(int k);

/// Totally antisymmetric symbol with upper indices, eps^{0123} = +1.
int levi_civita(int mu, int nu, int rho, int sigma);

/// Plane-wave Pauli-Lubanski matrices W^mu(p) = (1/4) eps^{mu nu rho sigma} sigma_{nu rho} p_sigma,
/// i.e. the derivative replaced by -i p_sigma acting on exp(-i p.x).
std::array<Matrix4, 4> pauli_lubanski(const FourVector& p);

/// Contraction W.s = W^mu s_mu.
Matrix4 contract(const std::array<Matrix4, 4>& w, const FourVector& s);

/// Kronecker product, row index 4i+j (first factor is the slow index).
Matrix16 tensor_product(const Matrix4& a, const Matrix4& b);

/// Max-abs entrywise distance, the comparison norm used for all matrices.
template <typename Derived, typename Other>
double max_abs_diff(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace relbell
