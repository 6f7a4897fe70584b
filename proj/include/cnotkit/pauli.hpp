#pragma once

#include <cmath>

#include "cnotkit/matrix.hpp"

namespace cnotkit {

/// Single-spin operator axis; e is the 2x2 identity.
enum class PauliAxis { e, x, y, z };

constexpr const char* to_string(PauliAxis a) {
  switch (a) {
    case PauliAxis::e: return "e";
    case PauliAxis::x: return "x";
    case PauliAxis::y: return "y";
    default: return "z";
  }
}

inline Matrix2 pauli_matrix(PauliAxis a) {
  constexpr Complex o{1.0, 0.0};
  constexpr Complex i{0.0, 1.0};
  switch (a) {
    case PauliAxis::e: return Matrix2{o, 0, 0, o};
    case PauliAxis::x: return Matrix2{0, o, o, 0};
    case PauliAxis::y: return Matrix2{0, -i, i, 0};
    default: return Matrix2{o, 0, 0, -o};
  }
}

/// Two-factor tensor word over {e, x, y, z}; the generator of every pulse.
/// Its 4x4 matrix is Hermitian, unitary and squares to the identity.
struct PauliString {
  PauliAxis spin1 = PauliAxis::e;
  PauliAxis spin2 = PauliAxis::e;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

inline Matrix4 pauli_string_matrix(const PauliString& p) {
  return tensor_product(pauli_matrix(p.spin1), pauli_matrix(p.spin2));
}

/// exp(i * theta * P) for a Pauli string P. Because P^2 = I this is exactly
/// cos(theta) I + i sin(theta) P, which also covers the all-identity string
/// (a plain global phase e^{i theta}).
inline Matrix4 exp_i_theta_pauli(double theta, const PauliString& p) {
  const Complex c{std::cos(theta), 0.0};
  const Complex is{0.0, std::sin(theta)};
  return c * Matrix4::identity() + is * pauli_string_matrix(p);
}

}  // namespace cnotkit
