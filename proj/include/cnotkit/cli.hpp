#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cnotkit/catalog.hpp"
#include "cnotkit/dynamics.hpp"
#include "cnotkit/json_io.hpp"
#include "cnotkit/similarity.hpp"
#include "cnotkit/synthesis.hpp"

namespace cnotkit {

/// Outcome of one CLI invocation. Exit codes: 0 success, 2 usage or input
/// parse error, 3 "not-similar" verdict, 4 audit found an entry with no
/// matching form, 5 classification found no controlled-flip structure.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace cli_detail {

inline std::string format_real(double x, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x + 0.0);
  return buf;
}

inline std::string format_complex(const Complex& z) {
  const double re = z.real(), im = z.imag();
  if (std::abs(im) < 5e-13) return format_real(re);
  if (std::abs(re) < 5e-13) return format_real(im) + "i";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
  return buf;
}

inline std::string format_matrix(const Matrix4& m, const std::string& indent = "  ") {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += indent;
    for (int j = 0; j < 4; ++j) {
      if (j) out += "  ";
      std::string cell = format_complex(m(i, j));
      if (cell.size() < 20) cell += std::string(20 - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

inline std::string format_spectrum(const std::array<Complex, 4>& s) {
  std::string out = "{";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += format_complex(s[i]);
  }
  return out + "}";
}

/// Catalog id or path to a matrix file in the shared JSON schema.
inline Matrix4 resolve_matrix(const std::string& ref) {
  if (const CatalogEntry* e = find_entry(ref)) return e->declared;
  std::ifstream f(ref);
  if (!f) throw std::invalid_argument("'" + ref + "' is neither a catalog id nor a readable file");
  return matrix_from_json(Json::parse(f));
}

inline StateVector load_state(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read state file '" + path + "'");
  return state_from_json(Json::parse(f));
}

inline AxisSet parse_axis_set(const std::string& text) {
  if (text == "none" || text.empty()) return AxisSet::none();
  AxisSet s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "x")
      s.x = true;
    else if (tok == "y")
      s.y = true;
    else if (tok == "z")
      s.z = true;
    else
      throw std::invalid_argument("axis list must name x, y, z (comma separated) or 'none'");
  }
  return s;
}

/// Catalog id whose declared matrix equals m, if any.
inline std::string catalog_id_of(const Matrix4& m) {
  for (const CatalogEntry& e : builtin_catalog())
    if (approx_equal(e.declared, m, direct_tol)) return e.id;
  return "";
}

inline const char* property_label(int k) {
  switch (k) {
    case 1: return "equal determinants";
    case 2: return "equal traces";
    case 3: return "inverses similar";
    case 4: return "conjugator exists";
    case 5: return "equal spectra";
    default: return "eigenvector map";
  }
}

inline int run_audit(bool json, double tol, std::string& out, std::string& err) {
  const std::vector<AuditRecord> records = audit_catalog(tol);

  if (json) {
    Json arr = Json::array();
    for (const AuditRecord& r : records) arr.push_back(audit_record_to_json(r));
    out = arr.dump(2) + "\n";
  } else {
    out = "id     source  r_ok  exp_ok  agree  r_dev      exp_dev    forms_dev\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const AuditRecord& r = records[i];
      const CatalogEntry& e = builtin_catalog()[i];
      char line[160];
      std::snprintf(line, sizeof line, "%-6s %-7s %-5s %-7s %-6s %-10.3e %-10.3e %-10.3e\n",
                    r.id.c_str(), e.source.c_str(), r.r_matches_declared ? "yes" : "no",
                    r.exp_matches_declared ? "yes" : "no", r.forms_agree ? "yes" : "no",
                    r.r_deviation, r.exp_deviation, r.forms_deviation);
      out += line;
    }
  }

  for (const AuditRecord& r : records)
    if (!r.r_matches_declared && !r.exp_matches_declared) {
      err = "transcription error: entry " + r.id + " matches neither of its printed forms\n";
      return 4;
    }
  return 0;
}

inline int run_enumerate(bool json, bool phase_classes, std::string& out) {
  const std::vector<FamilyMember> family = enumerate_family();
  std::vector<int> labels;
  if (phase_classes) labels = phase_class_labels(family);

  if (json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
      Json j = template_to_json(family[i].tmpl);
      const std::string id = catalog_id_of(family[i].matrix);
      j["catalog_id"] = id.empty() ? Json(nullptr) : Json(id);
      if (phase_classes) j["phase_class"] = labels[i];
      j["matrix"] = matrix_to_json(family[i].matrix);
      arr.push_back(j);
    }
    out = arr.dump(2) + "\n";
  } else {
    out = phase_classes ? "axis  spin  coupling  z  class  sequence                                     catalog\n"
                        : "axis  spin  coupling  z  sequence                                     catalog\n";
    for (std::size_t i = 0; i < family.size(); ++i) {
      const SequenceTemplate& t = family[i].tmpl;
      char line[192];
      const std::string seq = format_sequence(expand(t));
      const std::string id = catalog_id_of(family[i].matrix);
      if (phase_classes)
        std::snprintf(line, sizeof line, "%-5s %-5d %-9s %-2s %-6d %-44s %s\n", to_string(t.axis),
                      t.spin, t.coupling_sign > 0 ? "+" : "-", t.z_sign > 0 ? "+" : "-", labels[i],
                      seq.c_str(), id.c_str());
      else
        std::snprintf(line, sizeof line, "%-5s %-5d %-9s %-2s %-44s %s\n", to_string(t.axis), t.spin,
                      t.coupling_sign > 0 ? "+" : "-", t.z_sign > 0 ? "+" : "-", seq.c_str(),
                      id.c_str());
      out += line;
    }
  }
  return 0;
}

inline int run_similar(const std::string& ref_a, const std::string& ref_b, bool json, double tol,
                       std::string& out) {
  const Matrix4 a = resolve_matrix(ref_a);
  const Matrix4 b = resolve_matrix(ref_b);
  const SimilarityReport rep = check_similarity(a, b, tol);

  if (json) {
    out = similarity_report_to_json(rep).dump(2) + "\n";
  } else {
    out = std::string("verdict: ") + (rep.similar ? "similar" : "not-similar") + "\n";
    for (int k = 1; k <= 6; ++k) {
      const PropertyCheck& c = rep.property(k);
      out += "property " + std::to_string(k) + " (" + property_label(k) + "): ";
      out += c.pass ? "pass" : "FAIL";
      if (c.lhs) out += "  lhs=" + format_complex(*c.lhs) + " rhs=" + format_complex(*c.rhs);
      if (c.lhs_spectrum)
        out += "  lhs=" + format_spectrum(*c.lhs_spectrum) + " rhs=" + format_spectrum(*c.rhs_spectrum);
      if (c.residual) out += "  residual=" + format_real(*c.residual, "%.3e");
      out += '\n';
      if (!c.note.empty()) out += "  note: " + c.note + "\n";
    }
    if (rep.conjugator) out += "conjugator:\n" + format_matrix(*rep.conjugator);
  }
  return rep.similar ? 0 : 3;
}

inline int run_classify(const std::string& ref, bool json, double tol, std::string& out) {
  const Matrix4 m = resolve_matrix(ref);
  const auto g = try_classify_cnot_like(m, tol);
  if (!g) {
    out = "not CNOT-like: no controlled-flip permutation-with-phases structure\n";
    return 5;
  }
  if (json) {
    out = classification_to_json(*g).dump(2) + "\n";
  } else {
    out = "control spin " + std::to_string(g->control_spin) + " (polarity " +
          to_string(g->control_polarity) + "), target spin " + std::to_string(g->target_spin) + "\n";
    out += "basis phases: ";
    for (int i = 0; i < 4; ++i) {
      if (i) out += ", ";
      out += format_complex(g->basis_phases[i]);
    }
    out += '\n';
  }
  return 0;
}

inline int run_apply(const std::string& op_ref, const std::string& state_path, bool json,
                     std::string& out) {
  const Matrix4 m = resolve_matrix(op_ref);
  const StateVector psi = load_state(state_path);
  const StateVector result = apply_operator(m, psi);
  if (json) {
    out = state_to_json(result).dump(2) + "\n";
  } else {
    const char* kets[4] = {"|uu>", "|ud>", "|du>", "|dd>"};
    for (int i = 0; i < 4; ++i)
      out += std::string(kets[i]) + ": " + format_complex(result.amplitudes[i]) + "\n";
  }
  return 0;
}

inline int run_evolve(const HamiltonianParams& p, double t, bool json, std::string& out) {
  const Matrix4 u = hamiltonian_unitary(p, t);
  if (json)
    out = matrix_to_json(u).dump(2) + "\n";
  else
    out = format_matrix(u, "");
  return 0;
}

inline int run_select(const AxisConstraint& c, bool json, std::string& out) {
  const std::vector<SequenceTemplate> picked = select_realizable(c);
  if (json) {
    Json arr = Json::array();
    for (const SequenceTemplate& t : picked) {
      Json j = template_to_json(t);
      const std::string id = catalog_id_of(evaluate_sequence(expand(t)));
      j["catalog_id"] = id.empty() ? Json(nullptr) : Json(id);
      arr.push_back(j);
    }
    out = arr.dump(2) + "\n";
  } else {
    if (picked.empty()) {
      out = "no realizable sequence: every family member needs the coupling pulse plus the z "
            "axis and one of x/y on the sandwiched spin\n";
      return 0;
    }
    out = std::to_string(picked.size()) + " realizable sequence(s)\n";
    for (const SequenceTemplate& t : picked) {
      const std::string id = catalog_id_of(evaluate_sequence(expand(t)));
      out += "  " + format_sequence(expand(t)) + (id.empty() ? "" : "   [" + id + "]") + "\n";
    }
  }
  return 0;
}

}  // namespace cli_detail

/// Dispatches one command line (without the program name). Pure: the same
/// argv always produces byte-identical output.
inline CommandResult run_command(const std::vector<std::string>& argv) {
  CommandResult res;

  CLI::App app{"two-spin CNOT gate toolkit: pulse compiler, catalog audit, similarity checks"};
  app.name("cnotkit");
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output")->configurable(false);

  double tol_direct = direct_tol;
  double tol_eigen = eigen_tol;

  auto* audit = app.add_subcommand("audit", "recompute both pulse forms of every catalog entry");
  audit->add_option("--tol", tol_direct, "comparison tolerance");
  audit->add_flag("--json", json, "machine-readable output");

  bool phase_classes = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the 16-member CNOT family");
  enumerate->add_flag("--phase-classes", phase_classes, "group members equal up to a global phase");
  enumerate->add_flag("--json", json, "machine-readable output");

  std::string ref_a, ref_b;
  auto* similar = app.add_subcommand("similar", "run the six similarity checks on two matrices");
  similar->add_option("A", ref_a, "catalog id or matrix file")->required();
  similar->add_option("B", ref_b, "catalog id or matrix file")->required();
  similar->add_option("--tol", tol_eigen, "comparison tolerance");
  similar->add_flag("--json", json, "machine-readable output");

  std::string ref_m;
  auto* classify = app.add_subcommand("classify", "read the controlled-flip structure of a matrix");
  classify->add_option("M", ref_m, "catalog id or matrix file")->required();
  classify->add_option("--tol", tol_eigen, "comparison tolerance");
  classify->add_flag("--json", json, "machine-readable output");

  std::string op_ref, state_path;
  auto* apply = app.add_subcommand("apply", "apply an operator to a state vector");
  apply->add_option("M", op_ref, "catalog id or matrix file")->required();
  apply->add_option("state", state_path, "state file: JSON array of four [re,im] pairs")->required();
  apply->add_flag("--json", json, "machine-readable output");

  HamiltonianParams params;
  double evolve_t = 0.0;
  auto* evolve = app.add_subcommand("evolve", "free evolution under the two-spin Hamiltonian");
  evolve->add_option("--omega1", params.omega1, "spin-1 resonance (rad/s)");
  evolve->add_option("--omega2", params.omega2, "spin-2 resonance (rad/s)");
  evolve->add_option("--omega12", params.omega12, "scalar coupling (rad/s)");
  evolve->add_option("--t", evolve_t, "evolution time (s)")->required();
  evolve->add_flag("--json", json, "machine-readable output");

  std::string spin1_axes = "x,y,z", spin2_axes = "x,y,z", coupling = "yes";
  auto* select = app.add_subcommand("select", "family members realizable under axis constraints");
  select->add_option("--spin1", spin1_axes, "allowed axes on spin 1, e.g. x,z or none");
  select->add_option("--spin2", spin2_axes, "allowed axes on spin 2");
  select->add_option("--coupling", coupling, "coupling pulse available: yes or no");
  select->add_flag("--json", json, "machine-readable output");

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 wants them reversed
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }

  try {
    if (*audit) res.exit_code = cli_detail::run_audit(json, tol_direct, res.out, res.err);
    if (*enumerate) res.exit_code = cli_detail::run_enumerate(json, phase_classes, res.out);
    if (*similar) res.exit_code = cli_detail::run_similar(ref_a, ref_b, json, tol_eigen, res.out);
    if (*classify) res.exit_code = cli_detail::run_classify(ref_m, json, tol_eigen, res.out);
    if (*apply) res.exit_code = cli_detail::run_apply(op_ref, state_path, json, res.out);
    if (*evolve) res.exit_code = cli_detail::run_evolve(params, evolve_t, json, res.out);
    if (*select) {
      if (coupling != "yes" && coupling != "no")
        throw std::invalid_argument("--coupling must be yes or no");
      AxisConstraint c;
      c.spin1 = cli_detail::parse_axis_set(spin1_axes);
      c.spin2 = cli_detail::parse_axis_set(spin2_axes);
      c.coupling_available = coupling == "yes";
      res.exit_code = cli_detail::run_select(c, json, res.out);
    }
  } catch (const std::exception& e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }
  return res;
}

}  // namespace cnotkit
