#pragma once

// Test-only helpers, kept independent of the analytic code paths they check:
// a plain Taylor-series matrix exponential, quadratic characteristic-polynomial
// roots, and seeded random draws.

#include <array>
#include <random>

#include "cnotkit/matrix.hpp"
#include "cnotkit/pauli.hpp"
#include "cnotkit/pulse.hpp"

namespace testsupport {

using cnotkit::Complex;
using cnotkit::Matrix2;
using cnotkit::Matrix4;

/// 50-term Taylor series of exp(A). Accurate to well below 1e-12 for
/// ||A|| up to ~2 pi, which covers every draw used in the tests.
inline Matrix4 expm_taylor(const Matrix4& a) {
  Matrix4 sum = Matrix4::identity();
  Matrix4 term = Matrix4::identity();
  for (int k = 1; k <= 50; ++k) {
    term = Complex{1.0 / k, 0.0} * (term * a);
    sum = sum + term;
  }
  return sum;
}

/// Roots of z^2 - tr z + det, the characteristic polynomial of a 2x2 block.
inline std::array<Complex, 2> quadratic_eigenvalues(const Matrix2& m) {
  const Complex tr = m(0, 0) + m(1, 1);
  const Complex d = cnotkit::det(m);
  const Complex disc = std::sqrt(tr * tr - 4.0 * d);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

inline Complex random_complex(std::mt19937& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

/// Haar-distributed 4x4 unitary via Gram-Schmidt on a Gaussian matrix.
inline Matrix4 random_unitary4(std::mt19937& rng) {
  std::array<cnotkit::Vec4, 4> cols;
  for (auto& c : cols)
    for (auto& v : c) v = random_complex(rng);

  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < j; ++k) {
      Complex proj{0.0, 0.0};
      for (int i = 0; i < 4; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
      for (int i = 0; i < 4; ++i) cols[j][i] -= proj * cols[k][i];
    }
    const double n = cnotkit::norm(cols[j]);
    for (auto& v : cols[j]) v /= n;
  }

  Matrix4 u;
  for (int j = 0; j < 4; ++j) u.set_column(j, cols[j]);
  return u;
}

inline Matrix2 random_unitary2(std::mt19937& rng) {
  std::array<Complex, 2> c0{random_complex(rng), random_complex(rng)};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0 = {c0[0] / n0, c0[1] / n0};
  std::array<Complex, 2> c1{random_complex(rng), random_complex(rng)};
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1 = {c1[0] - proj * c0[0], c1[1] - proj * c0[1]};
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1 = {c1[0] / n1, c1[1] / n1};
  return Matrix2{c0[0], c1[0], c0[1], c1[1]};
}

inline cnotkit::PauliString random_pauli_string(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  constexpr cnotkit::PauliAxis axes[4] = {cnotkit::PauliAxis::e, cnotkit::PauliAxis::x,
                                          cnotkit::PauliAxis::y, cnotkit::PauliAxis::z};
  return {axes[pick(rng)], axes[pick(rng)]};
}

inline double random_angle(std::mt19937& rng, double lo = -3.14159265358979323846,
                           double hi = 3.14159265358979323846) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cnotkit::Pulse random_pulse(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> spin(1, 2);
  const double angle = random_angle(rng);
  switch (kind(rng)) {
    case 0: return cnotkit::Pulse::single(cnotkit::RotationAxis::x, spin(rng), angle);
    case 1: return cnotkit::Pulse::single(cnotkit::RotationAxis::y, spin(rng), angle);
    case 2: return cnotkit::Pulse::single(cnotkit::RotationAxis::z, spin(rng), angle);
    default: return cnotkit::Pulse::coupling(angle);
  }
}

inline cnotkit::PulseSequence random_sequence(std::mt19937& rng, int max_len = 8) {
  std::uniform_int_distribution<int> len(0, max_len);
  cnotkit::PulseSequence s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) s.pulses.push_back(random_pulse(rng));
  return s;
}

/// Random normal (not necessarily unitary) matrix U D U* with a spectrum
/// drawn from a small pool so degeneracies actually occur.
inline Matrix4 random_normal(std::mt19937& rng, std::array<Complex, 4>& spectrum_out) {
  // note the two entries sharing a real part: they collide in the Hermitian
  // part and force the second diagonalization stage to separate them
  const std::array<Complex, 6> pool{Complex{2.0, 0.0},  Complex{2.0, 0.0}, Complex{2.0, -3.0},
                                    Complex{0.0, 3.0},  Complex{-1.0, 0.5}, Complex{-0.5, -2.0}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Matrix4 d;
  for (int j = 0; j < 4; ++j) {
    spectrum_out[j] = pool[pick(rng)];
    d(j, j) = spectrum_out[j];
  }
  const Matrix4 u = random_unitary4(rng);
  return u * d * u.adjoint();
}

/// Random pulse with an exact pi-fraction angle, for text round-trips.
inline cnotkit::Pulse random_fraction_pulse(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> spin(1, 2);
  const int n = num(rng);
  const int d = den(rng);
  const double angle = n * 3.14159265358979323846 / d;
  switch (kind(rng)) {
    case 0: return cnotkit::Pulse::single(cnotkit::RotationAxis::x, spin(rng), angle);
    case 1: return cnotkit::Pulse::single(cnotkit::RotationAxis::y, spin(rng), angle);
    case 2: return cnotkit::Pulse::single(cnotkit::RotationAxis::z, spin(rng), angle);
    default: return cnotkit::Pulse::coupling(angle);
  }
}

}  // namespace testsupport
