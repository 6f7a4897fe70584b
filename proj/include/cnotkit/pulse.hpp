#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cnotkit/pauli.hpp"

namespace cnotkit {

/// Rotation axis of a pulse: a single-spin axis or the two-spin coupling.
enum class RotationAxis { x, y, z, zz };

/// One rotation R(theta) = exp(i theta P), where P is the pulse generator:
/// a single-spin Pauli with identity on the other spin, or the (z,z) string
/// for the coupling pulse.
struct Pulse {
  RotationAxis axis = RotationAxis::z;
  int spin = 1;  // 1 or 2; unused (0) for the coupling pulse
  double angle = 0.0;

  static Pulse single(RotationAxis a, int spin, double angle) {
    if (a == RotationAxis::zz) throw std::invalid_argument("coupling pulse takes no spin");
    if (spin != 1 && spin != 2) throw std::invalid_argument("spin must be 1 or 2");
    return Pulse{a, spin, angle};
  }

  static Pulse coupling(double angle) { return Pulse{RotationAxis::zz, 0, angle}; }

  PauliString generator() const {
    if (axis == RotationAxis::zz) return {PauliAxis::z, PauliAxis::z};
    PauliAxis single_axis = PauliAxis::x;
    if (axis == RotationAxis::y) single_axis = PauliAxis::y;
    if (axis == RotationAxis::z) single_axis = PauliAxis::z;
    if (spin == 1) return {single_axis, PauliAxis::e};
    return {PauliAxis::e, single_axis};
  }

  friend bool operator==(const Pulse& a, const Pulse& b) {
    return a.axis == b.axis && a.spin == b.spin && a.angle == b.angle;
  }
};

inline Matrix4 pulse_unitary(const Pulse& p) { return exp_i_theta_pauli(p.angle, p.generator()); }

/// Ordered pulses stored in application order: pulses[0] acts first on the
/// state. Note the text notation below is written the other way round.
struct PulseSequence {
  std::vector<Pulse> pulses;

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;
};

/// Product of the pulse unitaries, last-applied leftmost; the empty
/// sequence compiles to the identity.
inline Matrix4 evaluate_sequence(const PulseSequence& s) {
  Matrix4 u = Matrix4::identity();
  for (const Pulse& p : s.pulses) u = pulse_unitary(p) * u;
  return u;
}

/// Reversed order with negated angles; compiles to the inverse unitary.
inline PulseSequence inverse(const PulseSequence& s) {
  PulseSequence r;
  r.pulses.reserve(s.pulses.size());
  for (auto it = s.pulses.rbegin(); it != s.pulses.rend(); ++it)
    r.pulses.push_back(Pulse{it->axis, it->spin, -it->angle});
  return r;
}

/// a applied first, then b.
inline PulseSequence concat(const PulseSequence& a, const PulseSequence& b) {
  PulseSequence r = a;
  r.pulses.insert(r.pulses.end(), b.pulses.begin(), b.pulses.end());
  return r;
}

struct ParseError : std::runtime_error {
  ParseError(std::size_t token_index, const std::string& what_arg)
      : std::runtime_error("token " + std::to_string(token_index) + ": " + what_arg),
        token(token_index) {}
  std::size_t token;  // 1-based position of the offending token
};

namespace detail {

/// Reduced fraction of pi: value = num * pi / den, den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline std::optional<PiFraction> to_pi_fraction(double angle, double tol = 1e-9) {
  constexpr double pi = 3.14159265358979323846;
  for (std::int64_t den = 1; den <= 24; ++den) {
    const auto num = static_cast<std::int64_t>(std::llround(angle * den / pi));
    if (std::abs(angle - static_cast<double>(num) * pi / static_cast<double>(den)) <= tol) {
      const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
      return g > 1 ? PiFraction{num / g, den / g} : PiFraction{num, den};
    }
  }
  return std::nullopt;
}

inline std::string format_pi_fraction(const PiFraction& f) {
  if (f.num == 0) return "0";
  std::string s = f.num < 0 ? "-" : "";
  const std::int64_t a = f.num < 0 ? -f.num : f.num;
  if (a != 1) s += std::to_string(a);
  s += "pi";
  if (f.den != 1) s += "/" + std::to_string(f.den);
  return s;
}

inline std::optional<double> parse_pi_angle(std::string_view text) {
  std::size_t pos = 0;
  std::int64_t sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  auto digits = [&]() -> std::optional<std::int64_t> {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) return std::nullopt;
      ++pos;
    }
    return v;
  };

  if (text.substr(pos) == "0") return 0.0;

  std::int64_t num = 1;
  if (auto n = digits()) num = *n;
  if (text.substr(pos, 2) != "pi") return std::nullopt;
  pos += 2;
  std::int64_t den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    auto d = digits();
    if (!d || *d == 0) return std::nullopt;
    den = *d;
  }
  if (pos != text.size()) return std::nullopt;
  constexpr double pi = 3.14159265358979323846;
  return static_cast<double>(sign * num) * pi / static_cast<double>(den);
}

inline std::optional<Pulse> parse_pulse_token(std::string_view tok) {
  if (tok.size() < 4 || tok[0] != 'R') return std::nullopt;
  std::size_t pos = 1;

  RotationAxis axis;
  int spin = 0;
  if (tok.substr(pos, 2) == "zz") {
    axis = RotationAxis::zz;
    pos += 2;
  } else {
    switch (tok[pos]) {
      case 'x': axis = RotationAxis::x; break;
      case 'y': axis = RotationAxis::y; break;
      case 'z': axis = RotationAxis::z; break;
      default: return std::nullopt;
    }
    ++pos;
    if (pos >= tok.size() || (tok[pos] != '1' && tok[pos] != '2')) return std::nullopt;
    spin = tok[pos] - '0';
    ++pos;
  }

  if (pos >= tok.size() || tok[pos] != '(' || tok.back() != ')') return std::nullopt;
  const auto angle = parse_pi_angle(tok.substr(pos + 1, tok.size() - pos - 2));
  if (!angle) return std::nullopt;
  return Pulse{axis, spin, *angle};
}

}  // namespace detail

/// Parses the text notation, e.g. "Rx2(-pi/4) Rz2(-pi/4) Rzz(pi/4) Rx2(pi/4)".
/// Tokens are written leftmost-acts-last, so the returned sequence (stored in
/// application order) holds them reversed. Angles must be rational multiples
/// of pi: "0", "pi", "-pi/4", "3pi/4", ...
inline PulseSequence parse_sequence(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }

  PulseSequence seq;
  seq.pulses.reserve(tokens.size());
  for (std::size_t t = tokens.size(); t-- > 0;) {
    const auto pulse = detail::parse_pulse_token(tokens[t]);
    if (!pulse)
      throw ParseError(t + 1, "expected R<axis><spin>(<angle>) with axis x|y|z or Rzz(<angle>), got \"" +
                                  std::string(tokens[t]) + "\"");
    seq.pulses.push_back(*pulse);
  }
  return seq;
}

/// Renders a single pulse as a text token. Throws std::domain_error when the
/// angle is not a rational multiple of pi (the text format cannot carry it).
inline std::string format_pulse(const Pulse& p) {
  const auto frac = detail::to_pi_fraction(p.angle);
  if (!frac) throw std::domain_error("pulse angle is not a small rational multiple of pi");
  std::string s = "R";
  switch (p.axis) {
    case RotationAxis::x: s += 'x'; break;
    case RotationAxis::y: s += 'y'; break;
    case RotationAxis::z: s += 'z'; break;
    case RotationAxis::zz: s += "zz"; break;
  }
  if (p.axis != RotationAxis::zz) s += static_cast<char>('0' + p.spin);
  return s + "(" + detail::format_pi_fraction(*frac) + ")";
}

/// Inverse of parse_sequence: emits tokens leftmost-acts-last.
inline std::string format_sequence(const PulseSequence& s) {
  std::string out;
  for (auto it = s.pulses.rbegin(); it != s.pulses.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += format_pulse(*it);
  }
  return out;
}

}  // namespace cnotkit
