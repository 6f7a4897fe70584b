#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>

namespace cnotkit {

using Complex = std::complex<double>;

/// Tolerance for comparing products of exact pi/4 factors.
inline constexpr double direct_tol = 1e-12;
/// Tolerance for anything routed through an eigensolve.
inline constexpr double eigen_tol = 1e-9;

/// Dense NxN complex matrix with value semantics, row-major storage.
/// The 4x4 flavour carries the two-spin basis |uu>, |ud>, |du>, |dd>;
/// spin 1 is the slow (left) index everywhere in this library.
template <int N>
class SquareMatrix {
  static_assert(N >= 1 && N <= 4);

public:
  constexpr SquareMatrix() = default;

  /// Row-major entries, must supply all N*N of them.
  SquareMatrix(std::initializer_list<Complex> entries) {
    std::size_t k = 0;
    for (const Complex& v : entries) {
      if (k >= data_.size()) break;
      data_[k++] = v;
    }
  }

  static constexpr SquareMatrix zero() { return SquareMatrix{}; }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
  }

  constexpr Complex& operator()(int row, int col) { return data_[static_cast<std::size_t>(row) * N + col]; }
  constexpr const Complex& operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * N + col];
  }

  static constexpr int size() { return N; }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend SquareMatrix operator*(const Complex& c, const SquareMatrix& m) {
    SquareMatrix r;
    for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = c * m.data_[k];
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < N; ++k) acc += a(i, k) * b(k, j);
        r(i, j) = acc;
      }
    return r;
  }

  SquareMatrix adjoint() const {
    SquareMatrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    for (const Complex& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  std::array<Complex, 4> column(int j) const
    requires(N == 4)
  {
    return {(*this)(0, j), (*this)(1, j), (*this)(2, j), (*this)(3, j)};
  }

  void set_column(int j, const std::array<Complex, 4>& v)
    requires(N == 4)
  {
    for (int i = 0; i < 4; ++i) (*this)(i, j) = v[i];
  }

private:
  std::array<Complex, static_cast<std::size_t>(N) * N> data_{};
};

template <int N>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<N>& m) {
  for (int i = 0; i < N; ++i) {
    os << (i == 0 ? "[(" : " (");
    for (int j = 0; j < N; ++j) {
      if (j) os << ", ";
      os << m(i, j).real() << (m(i, j).imag() < 0 ? "" : "+") << m(i, j).imag() << "i";
    }
    os << (i == N - 1 ? ")]" : ")\n");
  }
  return os;
}

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

using Vec4 = std::array<Complex, 4>;

template <int N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double m = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// Elementwise equality within tol (max norm).
template <int N>
bool approx_equal(const SquareMatrix<N>& a, const SquareMatrix<N>& b, double tol = direct_tol) {
  return max_abs_diff(a, b) <= tol;
}

template <int N>
bool is_unitary(const SquareMatrix<N>& m, double tol = direct_tol) {
  return max_abs_diff(m.adjoint() * m, SquareMatrix<N>::identity()) <= tol;
}

/// Normality via the commutator ||M M* - M* M||max.
template <int N>
bool is_normal(const SquareMatrix<N>& m, double tol = eigen_tol) {
  const SquareMatrix<N> mh = m.adjoint();
  return max_abs_diff(m * mh, mh * m) <= tol;
}

inline Complex det(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline Complex det(const Matrix4& m) {
  // expansion by 2x2 complementary minors along the first two rows
  auto minor2 = [&](int c0, int c1) { return m(0, c0) * m(1, c1) - m(0, c1) * m(1, c0); };
  auto lower2 = [&](int c0, int c1) { return m(2, c0) * m(3, c1) - m(2, c1) * m(3, c0); };
  return minor2(0, 1) * lower2(2, 3) - minor2(0, 2) * lower2(1, 3) + minor2(0, 3) * lower2(1, 2) +
         minor2(1, 2) * lower2(0, 3) - minor2(1, 3) * lower2(0, 2) + minor2(2, 3) * lower2(0, 1);
}

inline Vec4 operator*(const Matrix4& m, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j < 4; ++j) acc += m(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

inline double norm(const Vec4& v) {
  double s = 0.0;
  for (const Complex& a : v) s += std::norm(a);
  return std::sqrt(s);
}

/// Kronecker product; a is the spin-1 (slow) factor:
/// entry (2i+k, 2j+l) = a(i,j) * b(k,l).
inline Matrix4 tensor_product(const Matrix2& a, const Matrix2& b) {
  Matrix4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

/// Finds the unit-modulus scalar c with a = c * b within tol, if one exists.
/// The scalar is read off the largest entry of b, then checked elementwise.
inline std::optional<Complex> equal_up_to_global_phase(const Matrix4& a, const Matrix4& b,
                                                       double tol = direct_tol) {
  int pr = 0, pc = 0;
  double best = -1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        pr = i;
        pc = j;
      }
  if (best <= tol) {
    // b is (numerically) zero; only matches a zero a, and no phase is defined
    return std::nullopt;
  }
  const Complex c = a(pr, pc) / b(pr, pc);
  if (std::abs(std::abs(c) - 1.0) > tol) return std::nullopt;
  if (max_abs_diff(a, c * b) > tol) return std::nullopt;
  return c;
}

}  // namespace cnotkit
