#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "cnotkit/catalog.hpp"
#include "cnotkit/dynamics.hpp"
#include "cnotkit/matrix.hpp"
#include "cnotkit/pulse.hpp"
#include "cnotkit/similarity.hpp"
#include "cnotkit/synthesis.hpp"

namespace cnotkit {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entry must be a [re, im] number pair");
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("complex entry must be finite");
  return z;
}

/// {"rows": [[[re,im] x4] x4]} in the fixed |uu>,|ud>,|du>,|dd> basis order.
inline Json matrix_to_json(const Matrix4& m) {
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

inline Matrix4 matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("expected {\"rows\": ...}");
  const Json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != 4) throw std::invalid_argument("matrix must have 4 rows");
  Matrix4 m;
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4)
      throw std::invalid_argument("matrix row " + std::to_string(i) + " must have 4 entries");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from_json(rows[i][k]);
  }
  return m;
}

/// States are a bare array of four [re, im] pairs.
inline Json state_to_json(const StateVector& s) {
  Json j = Json::array();
  for (const Complex& a : s.amplitudes) j.push_back(complex_to_json(a));
  return j;
}

inline StateVector state_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("state must be an array of 4 [re, im] pairs");
  StateVector s;
  for (int i = 0; i < 4; ++i) s.amplitudes[i] = complex_from_json(j[i]);
  return s;
}

inline Json pulse_to_json(const Pulse& p) {
  const auto frac = detail::to_pi_fraction(p.angle);
  if (!frac) throw std::domain_error("pulse angle is not a small rational multiple of pi");
  Json j;
  switch (p.axis) {
    case RotationAxis::x: j["axis"] = "x"; break;
    case RotationAxis::y: j["axis"] = "y"; break;
    case RotationAxis::z: j["axis"] = "z"; break;
    case RotationAxis::zz: j["axis"] = "zz"; break;
  }
  if (p.axis != RotationAxis::zz) j["spin"] = p.spin;
  j["angle"] = detail::format_pi_fraction(*frac);
  return j;
}

inline Pulse pulse_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("axis") || !j.contains("angle"))
    throw std::invalid_argument("pulse needs \"axis\" and \"angle\"");
  const std::string axis = j["axis"].get<std::string>();
  const auto angle = detail::parse_pi_angle(j["angle"].get<std::string>());
  if (!angle) throw std::invalid_argument("pulse angle must be a rational multiple of pi, e.g. \"-pi/4\"");
  if (axis == "zz") return Pulse::coupling(*angle);
  if (!j.contains("spin")) throw std::invalid_argument("single-spin pulse needs \"spin\"");
  const int spin = j["spin"].get<int>();
  RotationAxis a;
  if (axis == "x")
    a = RotationAxis::x;
  else if (axis == "y")
    a = RotationAxis::y;
  else if (axis == "z")
    a = RotationAxis::z;
  else
    throw std::invalid_argument("pulse axis must be one of x, y, z, zz");
  return Pulse::single(a, spin, *angle);
}

/// {"pulses": [...], "order": "application"} — pulses listed first-acts-first.
inline Json sequence_to_json(const PulseSequence& s) {
  Json pulses = Json::array();
  for (const Pulse& p : s.pulses) pulses.push_back(pulse_to_json(p));
  return Json{{"pulses", pulses}, {"order", "application"}};
}

inline PulseSequence sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pulses"))
    throw std::invalid_argument("expected {\"pulses\": [...], \"order\": \"application\"}");
  if (j.value("order", "application") != std::string("application"))
    throw std::invalid_argument("only \"application\" pulse order is supported");
  PulseSequence s;
  for (const Json& pj : j["pulses"]) s.pulses.push_back(pulse_from_json(pj));
  return s;
}

inline Json spectrum_to_json(const std::array<Complex, 4>& spectrum) {
  Json j = Json::array();
  for (const Complex& z : spectrum) j.push_back(complex_to_json(z));
  return j;
}

inline Json similarity_report_to_json(const SimilarityReport& rep) {
  Json props = Json::array();
  for (int k = 1; k <= 6; ++k) {
    const PropertyCheck& c = rep.property(k);
    Json pj;
    pj["property"] = k;
    pj["pass"] = c.pass;
    if (c.lhs)
      pj["lhs"] = complex_to_json(*c.lhs);
    else if (c.lhs_spectrum)
      pj["lhs"] = spectrum_to_json(*c.lhs_spectrum);
    else
      pj["lhs"] = nullptr;
    if (c.rhs)
      pj["rhs"] = complex_to_json(*c.rhs);
    else if (c.rhs_spectrum)
      pj["rhs"] = spectrum_to_json(*c.rhs_spectrum);
    else
      pj["rhs"] = nullptr;
    if (c.residual)
      pj["residual"] = *c.residual;
    else
      pj["residual"] = nullptr;
    if (!c.note.empty()) pj["note"] = c.note;
    props.push_back(pj);
  }
  Json j;
  j["verdict"] = rep.similar ? "similar" : "not-similar";
  j["properties"] = props;
  j["conjugator"] = rep.conjugator ? matrix_to_json(*rep.conjugator) : Json(nullptr);
  return j;
}

inline Json audit_record_to_json(const AuditRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["r_matches_declared"] = rec.r_matches_declared;
  j["exp_matches_declared"] = rec.exp_matches_declared;
  j["forms_agree"] = rec.forms_agree;
  j["r_deviation"] = rec.r_deviation;
  j["exp_deviation"] = rec.exp_deviation;
  j["forms_deviation"] = rec.forms_deviation;
  j["r_product"] = matrix_to_json(rec.r_product);
  j["exp_product"] = matrix_to_json(rec.exp_product);
  return j;
}

inline Json classification_to_json(const GateClassification& g) {
  Json j;
  j["control_spin"] = g.control_spin;
  j["control_polarity"] = to_string(g.control_polarity);
  j["target_spin"] = g.target_spin;
  Json phases = Json::array();
  for (const Complex& z : g.basis_phases) phases.push_back(complex_to_json(z));
  j["basis_phases"] = phases;
  return j;
}

inline Json template_to_json(const SequenceTemplate& t) {
  Json j;
  j["axis"] = to_string(t.axis);
  j["spin"] = t.spin;
  j["coupling_sign"] = t.coupling_sign;
  j["z_sign"] = t.z_sign;
  j["sequence"] = format_sequence(expand(t));
  return j;
}

}  // namespace cnotkit
