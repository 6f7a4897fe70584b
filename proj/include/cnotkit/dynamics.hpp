#pragma once

#include <cmath>
#include <stdexcept>

#include "cnotkit/matrix.hpp"

namespace cnotkit {

/// Two-spin state a|uu> + b|ud> + c|du> + d|dd> in the fixed basis order.
struct StateVector {
  Vec4 amplitudes{};

  double norm() const { return cnotkit::norm(amplitudes); }

  bool is_normalized(double tol = direct_tol) const { return std::abs(norm() - 1.0) <= tol; }

  StateVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero state");
    StateVector s;
    for (int i = 0; i < 4; ++i) s.amplitudes[i] = amplitudes[i] / n;
    return s;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

inline StateVector apply_operator(const Matrix4& m, const StateVector& psi) {
  return StateVector{m * psi.amplitudes};
}

/// Angular frequencies of the two-spin Hamiltonian
///   H/hbar = omega1 Z1 + omega2 Z2 + omega12 Z1 Z2,
/// all in rad/s with hbar folded in. omega12 may be zero, which makes the
/// coupling pulse unrealizable by free evolution.
struct HamiltonianParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega12 = 0.0;
};

/// exp(-i (H/hbar) t). H is diagonal in the spin basis, so this is the
/// diagonal of phases exp(-i t (s1 omega1 + s2 omega2 + s1 s2 omega12)) with
/// s = +1 for an up spin and -1 for a down spin.
inline Matrix4 hamiltonian_unitary(const HamiltonianParams& p, double t) {
  constexpr int s1[4] = {+1, +1, -1, -1};
  constexpr int s2[4] = {+1, -1, +1, -1};
  Matrix4 u;
  for (int k = 0; k < 4; ++k) {
    const double energy = s1[k] * p.omega1 + s2[k] * p.omega2 + s1[k] * s2[k] * p.omega12;
    u(k, k) = Complex{std::cos(energy * t), -std::sin(energy * t)};
  }
  return u;
}

struct ZeroCouplingError : std::runtime_error {
  ZeroCouplingError() : std::runtime_error("omega12 is zero; no evolution time realizes a coupling pulse") {}
};

/// Free-evolution recipe for the coupling pulse R_zz(theta): evolve for
/// `time`, then undo the single-spin z phases picked up along the way.
struct CouplingDelay {
  double time = 0.0;
  /// z-rotation angles accumulated on each spin during `time`; compensate
  /// with R_z1(-residual_z1) and R_z2(-residual_z2).
  double residual_z1 = 0.0;
  double residual_z2 = 0.0;
};

/// Solves hamiltonian_unitary(p, t) = R_z1(res1) R_z2(res2) R_zz(theta):
/// t = -theta/omega12, res_i = -omega_i t.
inline CouplingDelay coupling_delay(const HamiltonianParams& p, double theta) {
  if (p.omega12 == 0.0) throw ZeroCouplingError{};
  CouplingDelay d;
  d.time = -theta / p.omega12;
  d.residual_z1 = -p.omega1 * d.time;
  d.residual_z2 = -p.omega2 * d.time;
  return d;
}

}  // namespace cnotkit
