#pragma once

#include <utility>

#include "relbell/dirac.hpp"

// Rest-frame and boosted four-component Dirac spinors, normalized u^dagger u = 1.
namespace relbell {

using Spinor = Eigen::Vector4cd;

/// Spin projection +1/2 or -1/2 on the lab z axis.
enum class SpinLabel { Up, Down };

enum class Species { Particle, Antiparticle };

/// +1 for Up, -1 for Down.
constexpr int sign(SpinLabel s) { return s == SpinLabel::Up ? 1 : -1; }

/// Two-component sigma_3 eigenvector phi^(+-).
Eigen::Vector2cd pauli_spinor(SpinLabel spin);

/// Standard basis spinors: u(0,+1/2) = e0, u(0,-1/2) = e1, v(0,+1/2) = e2, v(0,-1/2) = e3.
Spinor rest_spinor(Species kind, SpinLabel spin);

/// u(p, spin) = sqrt((E+m)/2E) (phi ; sigma.p phi / (E+m)), spin quantized along lab z
/// regardless of the boost direction. Only positive-energy spinors are boosted.
Spinor boosted_spinor(const BoostParams& boost, SpinLabel spin);

/// Ordered orthonormal basis (u(p,+1/2), u(p,-1/2)) of the positive-energy subspace.
std::pair<Spinor, Spinor> positive_energy_projector_basis(const BoostParams& boost);

}  // namespace relbell
