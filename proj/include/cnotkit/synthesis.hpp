#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotkit/matrix.hpp"
#include "cnotkit/pulse.hpp"

namespace cnotkit {

/// Sandwich axis of the four-pulse construction; z alone cannot produce a
/// controlled flip (products of diagonal factors stay diagonal).
enum class SandwichAxis { x, y };

inline constexpr const char* to_string(SandwichAxis a) { return a == SandwichAxis::x ? "x" : "y"; }

/// The four-pulse pattern every family member follows:
///   R_{a,s}(-pi/4)  R_zz(eps * pi/4)  R_{z,s}(delta * pi/4)  R_{a,s}(pi/4)
/// written leftmost-acts-last. Two axes, two spins and two signs each give
/// exactly 16 distinct templates.
struct SequenceTemplate {
  SandwichAxis axis = SandwichAxis::x;
  int spin = 1;
  int coupling_sign = 1;  // eps
  int z_sign = 1;         // delta

  friend bool operator==(const SequenceTemplate&, const SequenceTemplate&) = default;
};

inline PulseSequence expand(const SequenceTemplate& t) {
  constexpr double quarter = 3.14159265358979323846 / 4.0;
  const RotationAxis a = t.axis == SandwichAxis::x ? RotationAxis::x : RotationAxis::y;
  PulseSequence s;
  // application order: the rightmost printed factor acts first
  s.pulses.push_back(Pulse::single(a, t.spin, quarter));
  s.pulses.push_back(Pulse::single(RotationAxis::z, t.spin, t.z_sign * quarter));
  s.pulses.push_back(Pulse::coupling(t.coupling_sign * quarter));
  s.pulses.push_back(Pulse::single(a, t.spin, -quarter));
  return s;
}

struct FamilyMember {
  SequenceTemplate tmpl;
  Matrix4 matrix;
};

/// All 16 members, sorted by (axis, spin, coupling_sign, z_sign) with
/// x before y, spin 1 before 2, and -1 before +1.
inline std::vector<FamilyMember> enumerate_family() {
  std::vector<FamilyMember> out;
  out.reserve(16);
  for (SandwichAxis axis : {SandwichAxis::x, SandwichAxis::y})
    for (int spin : {1, 2})
      for (int eps : {-1, +1})
        for (int delta : {-1, +1}) {
          const SequenceTemplate t{axis, spin, eps, delta};
          out.push_back({t, evaluate_sequence(expand(t))});
        }
  return out;
}

enum class Polarity { up, down };

inline constexpr const char* to_string(Polarity p) { return p == Polarity::up ? "up" : "down"; }

/// A controlled-flip reading of a permutation-with-phases matrix: the target
/// spin flips exactly when the control spin sits at the triggering polarity.
/// basis_phases[k] is the unit scalar the entry landing in basis slot k
/// carries (row k's single nonzero entry).
struct GateClassification {
  int control_spin = 1;
  Polarity control_polarity = Polarity::up;
  int target_spin = 2;
  std::array<Complex, 4> basis_phases{};
};

struct NotCnotLikeError : std::runtime_error {
  explicit NotCnotLikeError(const std::string& why) : std::runtime_error(why) {}
};

inline std::optional<GateClassification> try_classify_cnot_like(const Matrix4& m,
                                                                double tol = eigen_tol) {
  // the matrix must route each basis state to a unit-phase multiple of a
  // basis state
  std::array<int, 4> image{-1, -1, -1, -1};  // column -> row
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      const double mag = std::abs(m(i, j));
      if (mag > tol) {
        if (image[j] >= 0 || std::abs(mag - 1.0) > tol) return std::nullopt;
        image[j] = i;
      }
    }
    if (image[j] < 0) return std::nullopt;
  }
  std::array<bool, 4> hit{};
  for (int j = 0; j < 4; ++j) {
    if (hit[image[j]]) return std::nullopt;
    hit[image[j]] = true;
  }

  // exactly one controlled-flip pattern may match: two basis states fixed,
  // the other two (differing only in the target spin) exchanged
  struct Pattern {
    int lo, hi;  // swapped pair
    int control_spin;
    Polarity polarity;
    int target_spin;
  };
  constexpr std::array<Pattern, 4> patterns{{
      {0, 1, 1, Polarity::up, 2},    // |uu> <-> |ud>
      {2, 3, 1, Polarity::down, 2},  // |du> <-> |dd>
      {0, 2, 2, Polarity::up, 1},    // |uu> <-> |du>
      {1, 3, 2, Polarity::down, 1},  // |ud> <-> |dd>
  }};
  for (const Pattern& pat : patterns) {
    bool match = true;
    for (int j = 0; j < 4; ++j) {
      const int expected = (j == pat.lo) ? pat.hi : (j == pat.hi) ? pat.lo : j;
      if (image[j] != expected) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    GateClassification g;
    g.control_spin = pat.control_spin;
    g.control_polarity = pat.polarity;
    g.target_spin = pat.target_spin;
    for (int i = 0; i < 4; ++i) {
      const int from = (i == pat.lo) ? pat.hi : (i == pat.hi) ? pat.lo : i;
      g.basis_phases[i] = m(i, from);
    }
    return g;
  }
  return std::nullopt;
}

inline GateClassification classify_cnot_like(const Matrix4& m, double tol = eigen_tol) {
  auto g = try_classify_cnot_like(m, tol);
  if (!g) throw NotCnotLikeError("matrix is not a controlled flip with per-state phases");
  return *g;
}

/// Which single-spin rotation axes an apparatus can drive on one spin.
struct AxisSet {
  bool x = false;
  bool y = false;
  bool z = false;

  static constexpr AxisSet all() { return {true, true, true}; }
  static constexpr AxisSet none() { return {}; }

  constexpr bool contains(RotationAxis a) const {
    switch (a) {
      case RotationAxis::x: return x;
      case RotationAxis::y: return y;
      case RotationAxis::z: return z;
      default: return false;
    }
  }
};

struct AxisConstraint {
  AxisSet spin1;
  AxisSet spin2;
  bool coupling_available = true;

  static constexpr AxisConstraint unconstrained() { return {AxisSet::all(), AxisSet::all(), true}; }
};

inline bool realizable(const SequenceTemplate& t, const AxisConstraint& c) {
  if (!c.coupling_available) return false;
  const AxisSet& axes = t.spin == 1 ? c.spin1 : c.spin2;
  const RotationAxis sandwich = t.axis == SandwichAxis::x ? RotationAxis::x : RotationAxis::y;
  return axes.contains(sandwich) && axes.contains(RotationAxis::z);
}

/// The exact subset of the 16 templates whose pulses the constraints allow,
/// in enumeration order. Empty is a valid answer.
inline std::vector<SequenceTemplate> select_realizable(const AxisConstraint& c) {
  std::vector<SequenceTemplate> out;
  for (const FamilyMember& fm : enumerate_family())
    if (realizable(fm.tmpl, c)) out.push_back(fm.tmpl);
  return out;
}

/// Global-phase class label per family member, in enumeration order; labels
/// count up from 0 in order of first appearance.
inline std::vector<int> phase_class_labels(const std::vector<FamilyMember>& family,
                                           double tol = direct_tol) {
  std::vector<int> label(family.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (label[j] < 0 && equal_up_to_global_phase(family[i].matrix, family[j].matrix, tol))
        label[j] = next;
    ++next;
  }
  return label;
}

}  // namespace cnotkit
