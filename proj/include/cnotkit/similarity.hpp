#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "cnotkit/eigensystem.hpp"
#include "cnotkit/matrix.hpp"

namespace cnotkit {

/// Raised when the inverse-similarity check is asked about a singular matrix.
struct SingularInputError : std::runtime_error {
  explicit SingularInputError(double smallest_eigenvalue)
      : std::runtime_error("singular input: smallest eigenvalue modulus " +
                           std::to_string(smallest_eigenvalue)) {}
};

/// Outcome of one of the six checks, with the measured values that decided it.
struct PropertyCheck {
  bool pass = false;
  std::optional<Complex> lhs, rhs;                                 // scalar comparisons
  std::optional<std::array<Complex, 4>> lhs_spectrum, rhs_spectrum;  // spectral comparisons
  std::optional<double> residual;
  std::string note;
};

/// Per-property audit of the six similar-matrix checks. The verdict is
/// constructive: similar iff an explicit conjugator P with
/// ||A - P B P^-1||max <= tol was found and verified.
struct SimilarityReport {
  std::array<PropertyCheck, 6> properties{};
  std::optional<Matrix4> conjugator;
  bool similar = false;

  const PropertyCheck& property(int k) const { return properties[static_cast<std::size_t>(k - 1)]; }
};

/// Builds a conjugator P with A = P B P^-1 from the two eigenvector matrices,
/// eigenvalues aligned by greedy matching. Returns empty when the spectra do
/// not match as multisets or the substitution check fails. For normal inputs
/// with equal spectra the construction always succeeds: eigenspaces map onto
/// eigenspaces, so any orthonormal basis inside a degenerate block works.
inline std::optional<Matrix4> find_conjugator(const Matrix4& a, const Matrix4& b,
                                              double tol = eigen_tol) {
  const EigenSystem ea = eigen_decompose(a);
  const EigenSystem eb = eigen_decompose(b);

  const SpectrumMatch match = match_spectra(ea.values, eb.values);
  if (match.max_distance > tol) return std::nullopt;

  Matrix4 vb_aligned;
  for (int j = 0; j < 4; ++j) vb_aligned.set_column(j, eb.vectors.column(match.permutation[j]));

  // eigenvector matrices are unitary, so the inverse is the adjoint
  const Matrix4 p = ea.vectors * vb_aligned.adjoint();
  if (max_abs_diff(a, p * b * p.adjoint()) > tol) return std::nullopt;
  return p;
}

inline SimilarityReport check_similarity(const Matrix4& a, const Matrix4& b,
                                         double tol = eigen_tol) {
  SimilarityReport rep;
  const EigenSystem ea = eigen_decompose(a);  // rejects non-normal inputs
  const EigenSystem eb = eigen_decompose(b);

  // 1: determinants
  {
    PropertyCheck& c = rep.properties[0];
    c.lhs = det(a);
    c.rhs = det(b);
    c.residual = std::abs(*c.lhs - *c.rhs);
    c.pass = *c.residual <= tol;
  }

  // 2: traces
  {
    PropertyCheck& c = rep.properties[1];
    c.lhs = a.trace();
    c.rhs = b.trace();
    c.residual = std::abs(*c.lhs - *c.rhs);
    c.pass = *c.residual <= tol;
  }

  // 3: similarity of the inverses, decided on the inverse spectra {1/lambda}
  {
    double smallest = 1.0;
    for (int j = 0; j < 4; ++j)
      smallest = std::min({smallest, std::abs(ea.values[j]), std::abs(eb.values[j])});
    if (smallest <= 1e-12) throw SingularInputError(smallest);

    PropertyCheck& c = rep.properties[2];
    std::array<Complex, 4> ia, ib;
    for (int j = 0; j < 4; ++j) {
      ia[j] = Complex{1.0, 0.0} / ea.values[j];
      ib[j] = Complex{1.0, 0.0} / eb.values[j];
    }
    std::sort(ia.begin(), ia.end(), spectrum_less);
    std::sort(ib.begin(), ib.end(), spectrum_less);
    c.lhs_spectrum = ia;
    c.rhs_spectrum = ib;
    c.residual = match_spectra(ia, ib).max_distance;
    c.pass = *c.residual <= tol;
    c.note =
        "measured as a spectra test on the two inverses; the six-property list "
        "states this one as an implication, so for diagonalizable inputs the "
        "outcome tracks property 5";
  }

  // 4: explicit conjugator, verified by substitution
  {
    PropertyCheck& c = rep.properties[3];
    rep.conjugator = find_conjugator(a, b, tol);
    if (rep.conjugator) {
      c.residual = max_abs_diff(a, *rep.conjugator * b * rep.conjugator->adjoint());
      c.pass = true;
    }
  }

  // 5: eigenvalue multisets
  {
    PropertyCheck& c = rep.properties[4];
    c.lhs_spectrum = ea.values;
    c.rhs_spectrum = eb.values;
    c.residual = match_spectra(ea.values, eb.values).max_distance;
    c.pass = *c.residual <= tol;
  }

  // 6: the eigenvector map P = Va Vb^-1 sends each eigenvector of B to an
  // eigenvector of A for the matched eigenvalue
  {
    PropertyCheck& c = rep.properties[5];
    const SpectrumMatch match = match_spectra(ea.values, eb.values);
    if (match.max_distance <= tol) {
      // P vb_k = va_k by construction, so measure || A va_k - mu_k va_k ||
      // with mu_k the matched eigenvalue of B
      double worst = 0.0;
      for (int k = 0; k < 4; ++k) {
        const Vec4 w = ea.vectors.column(k);
        const Vec4 aw = a * w;
        const Complex mu = eb.values[match.permutation[k]];
        Vec4 diff;
        for (int i = 0; i < 4; ++i) diff[i] = aw[i] - mu * w[i];
        worst = std::max(worst, norm(diff));
      }
      c.residual = worst;
      c.pass = worst <= tol;
    }
  }

  rep.similar = rep.properties[3].pass;
  return rep;
}

}  // namespace cnotkit
