#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cnotkit/matrix.hpp"
#include "cnotkit/pulse.hpp"

namespace cnotkit {

/// One named matrix of the built-in catalog, transcribed verbatim from its
/// source construction: the declared matrix, the rotation-notation line and
/// the exponential-factor line (both in leftmost-acts-last text form), plus
/// the source cross-reference label so entries can be diffed against it.
struct CatalogEntry {
  std::string id;
  std::string source;
  Matrix4 declared;
  PulseSequence r_form;
  PulseSequence exp_form;
};

/// Result of recomputing both printed forms of an entry. Disagreements are
/// data, not failures: the audit records them instead of repairing them.
struct AuditRecord {
  std::string id;
  Matrix4 r_product;
  Matrix4 exp_product;
  double r_deviation = 0.0;      // ||r_product - declared||max
  double exp_deviation = 0.0;    // ||exp_product - declared||max
  double forms_deviation = 0.0;  // ||r_product - exp_product||max
  bool r_matches_declared = false;
  bool exp_matches_declared = false;
  bool forms_agree = false;
};

namespace detail {

inline std::vector<CatalogEntry> build_catalog() {
  constexpr Complex o{1.0, 0.0};
  constexpr Complex i{0.0, 1.0};

  auto entry = [](std::string id, std::string source, Matrix4 declared, std::string_view r_text,
                  std::string_view exp_text) {
    return CatalogEntry{std::move(id), std::move(source), declared, parse_sequence(r_text),
                        parse_sequence(exp_text)};
  };

  std::vector<CatalogEntry> cat;
  cat.reserve(17);

  // the controlled-NOT permutation carries the global prefactor sqrt(-i),
  // stored as the principal root e^{-i pi/4}
  const Complex root_minus_i{0.7071067811865475244, -0.7071067811865475244};
  cat.push_back(entry("C_g", "2,3",
                      root_minus_i * Matrix4{o, 0, 0, 0,  //
                                             0, o, 0, 0,  //
                                             0, 0, 0, o,  //
                                             0, 0, o, 0},
                      "Ry2(-pi/4) Rz1(-pi/4) Rz2(-pi/4) Rzz(pi/4) Ry2(pi/4)",
                      "Ry2(-pi/4) Rz1(-pi/4) Rz2(-pi/4) Rzz(pi/4) Rz2(pi/4)"));

  cat.push_back(entry("C_c1", "4,6",
                      Matrix4{o, 0, 0, 0,   //
                              0, o, 0, 0,   //
                              0, 0, 0, o,   //
                              0, 0, -o, 0},
                      "Rx2(-pi/4) Rz2(-pi/4) Rzz(pi/4) Rx2(pi/4)",
                      "Rx2(-pi/4) Rz2(-pi/4) Rzz(pi/4) Rx2(pi/4)"));

  cat.push_back(entry("C_c2", "5,7",
                      Matrix4{o, 0, 0, 0,   //
                              0, 0, 0, o,   //
                              0, 0, o, 0,   //
                              0, -o, 0, 0},
                      "Rx1(-pi/4) Rz1(-pi/4) Rzz(pi/4) Rx1(pi/4)",
                      "Rx1(-pi/4) Rz1(-pi/4) Rzz(pi/4) Rx1(pi/4)"));

  cat.push_back(entry("C_c11", "10",
                      Matrix4{o, 0, 0, 0,   //
                              0, o, 0, 0,   //
                              0, 0, 0, -i,  //
                              0, 0, -i, 0},
                      "Ry2(-pi/4) Rzz(pi/4) Rz2(-pi/4) Ry2(pi/4)",
                      "Ry2(-pi/4) Rzz(pi/4) Rz2(-pi/4) Ry2(pi/4)"));

  cat.push_back(entry("C_c22", "11",
                      Matrix4{o, 0, 0, 0,   //
                              0, 0, 0, -i,  //
                              0, 0, o, 0,   //
                              0, -i, 0, 0},
                      "Ry1(-pi/4) Rzz(pi/4) Rz1(-pi/4) Ry1(pi/4)",
                      "Ry1(-pi/4) Rzz(pi/4) Rz1(-pi/4) Ry1(pi/4)"));

  cat.push_back(entry("C_c31", "12",
                      Matrix4{0, 0, -i, 0,  //
                              0, o, 0, 0,   //
                              -i, 0, 0, 0,  //
                              0, 0, 0, o},
                      "Ry1(-pi/4) Rzz(-pi/4) Rz1(-pi/4) Ry1(pi/4)",
                      "Ry1(-pi/4) Rzz(-pi/4) Rz1(-pi/4) Ry1(pi/4)"));

  cat.push_back(entry("C_c32", "13",
                      Matrix4{0, -i, 0, 0,  //
                              -i, 0, 0, 0,  //
                              0, 0, o, 0,   //
                              0, 0, 0, o},
                      "Ry2(-pi/4) Rzz(-pi/4) Rz2(-pi/4) Ry2(pi/4)",
                      "Ry2(-pi/4) Rzz(-pi/4) Rz2(-pi/4) Ry2(pi/4)"));

  cat.push_back(entry("C_c41", "14",
                      Matrix4{0, 0, o, 0,   //
                              0, o, 0, 0,   //
                              -o, 0, 0, 0,  //
                              0, 0, 0, o},
                      "Rx1(-pi/4) Rzz(-pi/4) Rz1(-pi/4) Rx1(pi/4)",
                      "Rx1(-pi/4) Rzz(-pi/4) Rz1(-pi/4) Rx1(pi/4)"));

  cat.push_back(entry("C_c42", "15",
                      Matrix4{0, o, 0, 0,   //
                              -o, 0, 0, 0,  //
                              0, 0, o, 0,   //
                              0, 0, 0, o},
                      "Rx2(-pi/4) Rzz(-pi/4) Rz2(-pi/4) Rx2(pi/4)",
                      "Rx2(-pi/4) Rzz(-pi/4) Rz2(-pi/4) Rx2(pi/4)"));

  // the exponential line printed for this entry repeats the one of C_c31
  // (z1 angle sign flipped against the rotation line); kept as printed
  cat.push_back(entry("C_c51", "16",
                      Matrix4{o, 0, 0, 0,  //
                              0, 0, 0, i,  //
                              0, 0, o, 0,  //
                              0, i, 0, 0},
                      "Ry1(-pi/4) Rzz(-pi/4) Rz1(pi/4) Ry1(pi/4)",
                      "Ry1(-pi/4) Rzz(-pi/4) Rz1(-pi/4) Ry1(pi/4)"));

  cat.push_back(entry("C_c52", "17",
                      Matrix4{o, 0, 0, 0,  //
                              0, o, 0, 0,  //
                              0, 0, 0, i,  //
                              0, 0, i, 0},
                      "Ry2(-pi/4) Rzz(-pi/4) Rz2(pi/4) Ry2(pi/4)",
                      "Ry2(-pi/4) Rzz(-pi/4) Rz2(pi/4) Ry2(pi/4)"));

  cat.push_back(entry("C_c61", "18",
                      Matrix4{o, 0, 0, 0,   //
                              0, 0, 0, -o,  //
                              0, 0, o, 0,   //
                              0, o, 0, 0},
                      "Rx1(-pi/4) Rzz(-pi/4) Rz1(pi/4) Rx1(pi/4)",
                      "Rx1(-pi/4) Rzz(-pi/4) Rz1(pi/4) Rx1(pi/4)"));

  cat.push_back(entry("C_c62", "19",
                      Matrix4{o, 0, 0, 0,   //
                              0, o, 0, 0,   //
                              0, 0, 0, -o,  //
                              0, 0, o, 0},
                      "Rx2(-pi/4) Rzz(-pi/4) Rz2(pi/4) Rx2(pi/4)",
                      "Rx2(-pi/4) Rzz(-pi/4) Rz2(pi/4) Rx2(pi/4)"));

  cat.push_back(entry("C_c71", "20",
                      Matrix4{0, -o, 0, 0,  //
                              o, 0, 0, 0,   //
                              0, 0, o, 0,   //
                              0, 0, 0, o},
                      "Rx2(-pi/4) Rzz(pi/4) Rz2(pi/4) Rx2(pi/4)",
                      "Rx2(-pi/4) Rzz(pi/4) Rz2(pi/4) Rx2(pi/4)"));

  cat.push_back(entry("C_c72", "21",
                      Matrix4{0, 0, -o, 0,  //
                              0, o, 0, 0,   //
                              o, 0, 0, 0,   //
                              0, 0, 0, o},
                      "Rx1(-pi/4) Rzz(pi/4) Rz1(pi/4) Rx1(pi/4)",
                      "Rx1(-pi/4) Rzz(pi/4) Rz1(pi/4) Rx1(pi/4)"));

  cat.push_back(entry("C_c81", "22",
                      Matrix4{0, i, 0, 0,  //
                              i, 0, 0, 0,  //
                              0, 0, o, 0,  //
                              0, 0, 0, o},
                      "Ry2(-pi/4) Rzz(pi/4) Rz2(pi/4) Ry2(pi/4)",
                      "Ry2(-pi/4) Rzz(pi/4) Rz2(pi/4) Ry2(pi/4)"));

  cat.push_back(entry("C_c82", "23",
                      Matrix4{0, 0, i, 0,  //
                              0, o, 0, 0,  //
                              i, 0, 0, 0,  //
                              0, 0, 0, o},
                      "Ry1(-pi/4) Rzz(pi/4) Rz1(pi/4) Ry1(pi/4)",
                      "Ry1(-pi/4) Rzz(pi/4) Rz1(pi/4) Ry1(pi/4)"));

  return cat;
}

}  // namespace detail

/// The full built-in catalog: C_g plus the 16-member CNOT family.
inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = detail::build_catalog();
  return catalog;
}

/// nullptr when the id is unknown.
inline const CatalogEntry* find_entry(std::string_view id) {
  for (const CatalogEntry& e : builtin_catalog())
    if (e.id == id) return &e;
  return nullptr;
}

inline AuditRecord audit_entry(const CatalogEntry& e, double tol = direct_tol) {
  AuditRecord rec;
  rec.id = e.id;
  rec.r_product = evaluate_sequence(e.r_form);
  rec.exp_product = evaluate_sequence(e.exp_form);
  rec.r_deviation = max_abs_diff(rec.r_product, e.declared);
  rec.exp_deviation = max_abs_diff(rec.exp_product, e.declared);
  rec.forms_deviation = max_abs_diff(rec.r_product, rec.exp_product);
  rec.r_matches_declared = rec.r_deviation <= tol;
  rec.exp_matches_declared = rec.exp_deviation <= tol;
  rec.forms_agree = rec.forms_deviation <= tol;
  return rec;
}

inline std::vector<AuditRecord> audit_catalog(double tol = direct_tol) {
  std::vector<AuditRecord> out;
  out.reserve(builtin_catalog().size());
  for (const CatalogEntry& e : builtin_catalog()) out.push_back(audit_entry(e, tol));
  return out;
}

}  // namespace cnotkit
