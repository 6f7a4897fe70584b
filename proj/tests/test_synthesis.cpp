#include <catch2/catch_amalgamated.hpp>

#include "cnotkit/catalog.hpp"
#include "cnotkit/similarity.hpp"
#include "cnotkit/synthesis.hpp"
#include "support/oracles.hpp"

using namespace cnotkit;

namespace {
const Matrix4& catalog_matrix(const char* id) {
  const CatalogEntry* e = find_entry(id);
  REQUIRE(e != nullptr);
  return e->declared;
}
}  // namespace

TEST_CASE("the family has exactly 16 pairwise distinct members") {
  const auto family = enumerate_family();
  REQUIRE(family.size() == 16);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      CHECK(max_abs_diff(family[i].matrix, family[j].matrix) > eigen_tol);
}

TEST_CASE("enumeration order is canonical") {
  const auto family = enumerate_family();
  CHECK(family.front().tmpl == SequenceTemplate{SandwichAxis::x, 1, -1, -1});
  CHECK(family.back().tmpl == SequenceTemplate{SandwichAxis::y, 2, +1, +1});
  // repeated runs agree member by member
  const auto again = enumerate_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(family[i].tmpl == again[i].tmpl);
    CHECK(max_abs_diff(family[i].matrix, again[i].matrix) == 0.0);
  }
}

TEST_CASE("family matrices equal the sixteen declared catalog matrices as a set") {
  const auto family = enumerate_family();
  int matched = 0;
  for (const CatalogEntry& e : builtin_catalog()) {
    if (e.id == "C_g") continue;
    int hits = 0;
    for (const FamilyMember& fm : family)
      if (approx_equal(fm.matrix, e.declared, direct_tol)) ++hits;
    INFO(e.id);
    CHECK(hits == 1);
    matched += hits;
  }
  CHECK(matched == 16);
}

TEST_CASE("a specific template reproduces its catalog matrix") {
  const SequenceTemplate t{SandwichAxis::x, 2, +1, -1};
  CHECK(approx_equal(evaluate_sequence(expand(t)), catalog_matrix("C_c1"), direct_tol));
}

TEST_CASE("templates expand to the four-pulse sandwich") {
  const SequenceTemplate t{SandwichAxis::y, 1, -1, +1};
  const PulseSequence s = expand(t);
  REQUIRE(s.pulses.size() == 4);
  CHECK(format_sequence(s) == "Ry1(-pi/4) Rzz(-pi/4) Rz1(pi/4) Ry1(pi/4)");
}

TEST_CASE("all family members share the spectrum {1, 1, i, -i} and are pairwise similar") {
  const Complex o{1.0, 0.0};
  const Complex im{0.0, 1.0};
  const auto family = enumerate_family();
  for (const FamilyMember& fm : family) {
    const EigenSystem es = eigen_decompose(fm.matrix);
    CHECK(spectra_equal(es.values, {o, o, im, -im}, eigen_tol));
  }
  // spot-check constructive similarity across a few pairs; the full pairwise
  // sweep runs in the acceptance suite
  for (std::size_t i : {0u, 5u, 9u}) {
    for (std::size_t j : {3u, 12u, 15u}) {
      const SimilarityReport rep = check_similarity(family[i].matrix, family[j].matrix);
      CHECK(rep.similar);
    }
  }
}

TEST_CASE("the phased permutation gate is not similar to any family member") {
  const Matrix4& cg = catalog_matrix("C_g");
  for (const FamilyMember& fm : enumerate_family()) {
    const SimilarityReport rep = check_similarity(cg, fm.matrix);
    CHECK(!rep.similar);
    CHECK(!rep.property(2).pass);  // trace 2 e^{-i pi/4} never equals 2
  }
}

TEST_CASE("classification of fixed gates") {
  SECTION("control spin 1, polarity down, target spin 2") {
    const GateClassification g = classify_cnot_like(catalog_matrix("C_c1"));
    CHECK(g.control_spin == 1);
    CHECK(g.control_polarity == Polarity::down);
    CHECK(g.target_spin == 2);
    const Complex o{1.0, 0.0};
    CHECK(g.basis_phases[0] == o);
    CHECK(g.basis_phases[1] == o);
    CHECK(g.basis_phases[2] == o);
    CHECK(g.basis_phases[3] == -o);
  }

  SECTION("control spin 2, polarity up, target spin 1") {
    const GateClassification g = classify_cnot_like(catalog_matrix("C_c41"));
    CHECK(g.control_spin == 2);
    CHECK(g.control_polarity == Polarity::up);
    CHECK(g.target_spin == 1);
  }

  SECTION("the identity has no flip and is rejected") {
    CHECK(!try_classify_cnot_like(Matrix4::identity()).has_value());
    CHECK_THROWS_AS(classify_cnot_like(Matrix4::identity()), NotCnotLikeError);
  }
}

TEST_CASE("classification accepts every family member and no random unitary") {
  for (const FamilyMember& fm : enumerate_family()) {
    const auto g = try_classify_cnot_like(fm.matrix);
    REQUIRE(g.has_value());
    CHECK(g->control_spin != g->target_spin);
    for (const Complex& phase : g->basis_phases) CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-12);
  }

  std::mt19937 rng(8501);
  for (int trial = 0; trial < 100; ++trial)
    CHECK(!try_classify_cnot_like(testsupport::random_unitary4(rng)).has_value());
}

TEST_CASE("axis constraints pick out the realizable templates") {
  SECTION("everything allowed returns the full family") {
    const auto picked = select_realizable(AxisConstraint::unconstrained());
    REQUIRE(picked.size() == 16);
    const auto family = enumerate_family();
    for (std::size_t i = 0; i < 16; ++i) CHECK(picked[i] == family[i].tmpl);
  }

  SECTION("z-only apparatus realizes nothing") {
    AxisConstraint c;
    c.spin1 = AxisSet{false, false, true};
    c.spin2 = AxisSet{false, false, true};
    CHECK(select_realizable(c).empty());
  }

  SECTION("x and z on spin 2 only yields the four x-sandwich spin-2 members") {
    AxisConstraint c;
    c.spin1 = AxisSet::none();
    c.spin2 = AxisSet{true, false, true};
    const auto picked = select_realizable(c);
    REQUIRE(picked.size() == 4);
    for (const SequenceTemplate& t : picked) {
      CHECK(t.axis == SandwichAxis::x);
      CHECK(t.spin == 2);
    }
    // the four picked matrices are the declared ones of the catalog entries
    // C_c42, C_c62, C_c1 and C_c71
    for (const char* id : {"C_c1", "C_c42", "C_c62", "C_c71"}) {
      int hits = 0;
      for (const SequenceTemplate& t : picked)
        if (approx_equal(evaluate_sequence(expand(t)), catalog_matrix(id), direct_tol)) ++hits;
      INFO(id);
      CHECK(hits == 1);
    }
  }

  SECTION("no coupling means no family member") {
    AxisConstraint c = AxisConstraint::unconstrained();
    c.coupling_available = false;
    CHECK(select_realizable(c).empty());
  }
}

TEST_CASE("the sixteen members are distinct even up to global phase") {
  const auto family = enumerate_family();
  const auto labels = phase_class_labels(family);
  std::set<int> distinct(labels.begin(), labels.end());
  CHECK(distinct.size() == 16);
}
