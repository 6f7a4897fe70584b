#include <catch2/catch_amalgamated.hpp>

#include "cnotkit/pauli.hpp"
#include "support/oracles.hpp"

using namespace cnotkit;

namespace {
const Complex o{1.0, 0.0};

constexpr PauliAxis all_axes[4] = {PauliAxis::e, PauliAxis::x, PauliAxis::y, PauliAxis::z};
}  // namespace

TEST_CASE("pauli string matrices for the diagonal strings") {
  const Matrix4 z1 = pauli_string_matrix({PauliAxis::z, PauliAxis::e});
  CHECK(max_abs_diff(z1, Matrix4{o, 0, 0, 0, 0, o, 0, 0, 0, 0, -o, 0, 0, 0, 0, -o}) == 0.0);

  const Matrix4 ee = pauli_string_matrix({PauliAxis::e, PauliAxis::e});
  CHECK(max_abs_diff(ee, Matrix4::identity()) == 0.0);

  const Matrix4 zz = pauli_string_matrix({PauliAxis::z, PauliAxis::z});
  CHECK(max_abs_diff(zz, Matrix4{o, 0, 0, 0, 0, -o, 0, 0, 0, 0, -o, 0, 0, 0, 0, o}) == 0.0);
}

TEST_CASE("every pauli string is hermitian, unitary and involutory") {
  for (PauliAxis a1 : all_axes)
    for (PauliAxis a2 : all_axes) {
      const Matrix4 p = pauli_string_matrix({a1, a2});
      CHECK(max_abs_diff(p, p.adjoint()) == 0.0);
      CHECK(is_unitary(p, 1e-15));
      CHECK(max_abs_diff(p * p, Matrix4::identity()) == 0.0);
    }
}

TEST_CASE("analytic pauli exponential against fixed values") {
  SECTION("zero angle gives the identity") {
    std::mt19937 rng(8101);
    const PauliString p = testsupport::random_pauli_string(rng);
    CHECK(max_abs_diff(exp_i_theta_pauli(0.0, p), Matrix4::identity()) == 0.0);
  }

  SECTION("quarter turn of the coupling string") {
    const Matrix4 u = exp_i_theta_pauli(M_PI / 4, {PauliAxis::z, PauliAxis::z});
    const Complex eip{std::sqrt(0.5), std::sqrt(0.5)};
    const Complex eim{std::sqrt(0.5), -std::sqrt(0.5)};
    const Matrix4 expected{eip, 0, 0, 0, 0, eim, 0, 0, 0, 0, eim, 0, 0, 0, 0, eip};
    CHECK(max_abs_diff(u, expected) <= 1e-15);
    // cross-check the frozen value against the series oracle
    const Complex i{0.0, 1.0};
    CHECK(max_abs_diff(testsupport::expm_taylor((i * M_PI / 4.0) *
                                                pauli_string_matrix({PauliAxis::z, PauliAxis::z})),
                       expected) <= direct_tol);
  }

  SECTION("half turn of a single-spin string") {
    const Matrix4 u = exp_i_theta_pauli(M_PI / 2, {PauliAxis::e, PauliAxis::x});
    const Complex i{0.0, 1.0};
    const Matrix4 expected = i * pauli_string_matrix({PauliAxis::e, PauliAxis::x});
    CHECK(max_abs_diff(u, expected) <= 1e-15);
    CHECK(max_abs_diff(testsupport::expm_taylor((i * M_PI / 2.0) *
                                                pauli_string_matrix({PauliAxis::e, PauliAxis::x})),
                       expected) <= direct_tol);
  }

  SECTION("all-identity string is a pure global phase") {
    const Matrix4 u = exp_i_theta_pauli(0.3, {PauliAxis::e, PauliAxis::e});
    const Complex expected{std::cos(0.3), std::sin(0.3)};
    CHECK(max_abs_diff(u, expected * Matrix4::identity()) <= 1e-15);
  }
}

TEST_CASE("pauli exponential matches the series oracle on random draws") {
  std::mt19937 rng(8102);
  const Complex i{0.0, 1.0};
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const PauliString p = testsupport::random_pauli_string(rng);
    const double theta = testsupport::random_angle(rng);
    const Matrix4 analytic = exp_i_theta_pauli(theta, p);
    const Matrix4 series = testsupport::expm_taylor((i * theta) * pauli_string_matrix(p));
    worst = std::max(worst, max_abs_diff(analytic, series));
  }
  CHECK(worst <= direct_tol);
}

TEST_CASE("pauli exponential of opposite angles is the inverse") {
  std::mt19937 rng(8103);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliString p = testsupport::random_pauli_string(rng);
    const double theta = testsupport::random_angle(rng);
    CHECK(max_abs_diff(exp_i_theta_pauli(theta, p) * exp_i_theta_pauli(-theta, p),
                       Matrix4::identity()) <= direct_tol);
    CHECK(is_unitary(exp_i_theta_pauli(theta, p), direct_tol));
  }
}
