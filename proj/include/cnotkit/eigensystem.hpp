#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cnotkit/matrix.hpp"

namespace cnotkit {

/// Raised when a spectral routine is handed a matrix that fails the
/// normality check ||M M* - M* M||max <= 1e-9.
struct NotNormalError : std::runtime_error {
  explicit NotNormalError(double commutator_norm)
      : std::runtime_error("matrix is not normal (commutator norm " +
                           std::to_string(commutator_norm) + ")"),
        commutator(commutator_norm) {}
  double commutator;
};

/// Spectral decomposition of a normal 4x4 matrix. Column k of `vectors`
/// is a unit eigenvector for `values[k]`; the columns are orthonormal and
/// the order is canonical (ascending argument, then modulus), so the
/// output is deterministic.
struct EigenSystem {
  std::array<Complex, 4> values{};
  Matrix4 vectors;
};

namespace detail {

/// Cyclic complex Jacobi for a Hermitian matrix, restricted to index pairs
/// accepted by `allowed`. Rotations accumulate into v (a <- J* a J, v <- v J).
template <typename PairAllowed>
inline void jacobi_hermitian(Matrix4& a, Matrix4& v, PairAllowed&& allowed) {
  const double scale = std::max(1.0, a.max_abs());
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q)
        if (allowed(p, q)) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (!allowed(p, q)) continue;
        const double r = std::abs(a(p, q));
        if (r <= 1e-16 * scale) continue;

        // zero a(p,q): rotation angle from cot(2 theta), phase from a(p,q)
        const Complex phase = a(p, q) / r;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (beta - alpha) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex sp = s * phase;  // s e^{i phi}

        for (int k = 0; k < 4; ++k) {  // columns: A <- A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(sp) * akq;
          a(k, q) = sp * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {  // rows: A <- J* A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = std::conj(sp) * apk + c * aqk;
        }
        a(p, q) = Complex{0.0, 0.0};
        a(q, p) = Complex{0.0, 0.0};
        for (int k = 0; k < 4; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(sp) * vkq;
          v(k, q) = sp * vkp + c * vkq;
        }
      }
  }
}

inline void sort_columns_by_key(Matrix4& v, std::array<double, 4>& key) {
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return key[i] < key[j]; });
  Matrix4 vs;
  std::array<double, 4> ks{};
  for (int j = 0; j < 4; ++j) {
    vs.set_column(j, v.column(order[j]));
    ks[j] = key[order[j]];
  }
  v = vs;
  key = ks;
}

}  // namespace detail

/// Canonical eigenvalue order: ascending argument, then modulus, then re/im.
inline bool spectrum_less(const Complex& a, const Complex& b) {
  return std::make_tuple(std::arg(a), std::abs(a), a.real(), a.imag()) <
         std::make_tuple(std::arg(b), std::abs(b), b.real(), b.imag());
}

/// Diagonalizes a normal 4x4 matrix. The Hermitian and anti-Hermitian parts
/// of a normal matrix commute, so the joint eigenbasis is found by
/// diagonalizing H = (M + M*)/2 first and then the projection of
/// K = (M - M*)/2i inside each degenerate cluster of H. This resolves e.g.
/// the conjugate pair {i, -i}, whose real parts collide at zero.
inline EigenSystem eigen_decompose(const Matrix4& m) {
  {
    const Matrix4 mh = m.adjoint();
    const double comm = max_abs_diff(m * mh, mh * m);
    if (comm > eigen_tol) throw NotNormalError(comm);
  }

  const Complex half{0.5, 0.0};
  const Complex half_over_i{0.0, -0.5};  // 1/(2i)
  Matrix4 h = half * (m + m.adjoint());
  Matrix4 k = half_over_i * (m - m.adjoint());

  Matrix4 v = Matrix4::identity();
  detail::jacobi_hermitian(h, v, [](int, int) { return true; });

  std::array<double, 4> hvals{h(0, 0).real(), h(1, 1).real(), h(2, 2).real(), h(3, 3).real()};
  detail::sort_columns_by_key(v, hvals);

  std::array<int, 4> cluster{0, 0, 0, 0};
  for (int i = 1; i < 4; ++i)
    cluster[i] = (hvals[i] - hvals[i - 1] > 1e-8) ? cluster[i - 1] + 1 : cluster[i - 1];

  Matrix4 k1 = v.adjoint() * (k * v);
  Matrix4 v2 = Matrix4::identity();
  detail::jacobi_hermitian(k1, v2, [&](int p, int q) { return cluster[p] == cluster[q]; });
  v = v * v2;

  EigenSystem es;
  es.vectors = v;

  // Rayleigh quotients off the original matrix; with orthonormal joint
  // eigenvectors these are the eigenvalues to machine precision.
  const Matrix4 d = v.adjoint() * (m * v);
  for (int j = 0; j < 4; ++j) es.values[j] = d(j, j);

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return spectrum_less(es.values[i], es.values[j]); });

  EigenSystem sorted;
  for (int j = 0; j < 4; ++j) {
    sorted.values[j] = es.values[order[j]];
    sorted.vectors.set_column(j, es.vectors.column(order[j]));
  }
  return sorted;
}

/// max_k || M v_k - lambda_k v_k ||_2, the defect of an eigensystem.
inline double eigen_residual(const Matrix4& m, const EigenSystem& es) {
  double worst = 0.0;
  for (int j = 0; j < 4; ++j) {
    const Vec4 vj = es.vectors.column(j);
    const Vec4 mv = m * vj;
    Vec4 diff;
    for (int i = 0; i < 4; ++i) diff[i] = mv[i] - es.values[j] * vj[i];
    worst = std::max(worst, norm(diff));
  }
  return worst;
}

/// Greedy minimal-distance matching between two eigenvalue multisets.
/// Returns the permutation sending index k of `a` to its match in `b`
/// and the largest matched distance.
struct SpectrumMatch {
  std::array<int, 4> permutation{};
  double max_distance = 0.0;
};

inline SpectrumMatch match_spectra(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  SpectrumMatch res;
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    int best = -1;
    double best_d = 0.0;
    for (int j = 0; j < 4; ++j) {
      if (used[j]) continue;
      const double d = std::abs(a[i] - b[j]);
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    used[best] = true;
    res.permutation[i] = best;
    res.max_distance = std::max(res.max_distance, best_d);
  }
  return res;
}

/// Eigenvalue multiset equality within tol, via greedy matching.
inline bool spectra_equal(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b,
                          double tol = eigen_tol) {
  return match_spectra(a, b).max_distance <= tol;
}

}  // namespace cnotkit
