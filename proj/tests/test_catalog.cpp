#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cnotkit/catalog.hpp"
#include "cnotkit/json_io.hpp"

using namespace cnotkit;

namespace {
const Complex o{1.0, 0.0};
}

TEST_CASE("catalog holds the 17 named entries") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 17);

  std::set<std::string> ids;
  for (const CatalogEntry& e : cat) ids.insert(e.id);
  CHECK(ids.size() == 17);
  CHECK(ids.count("C_g") == 1);
  for (const char* id : {"C_c1", "C_c2", "C_c11", "C_c22", "C_c31", "C_c32", "C_c41", "C_c42",
                         "C_c51", "C_c52", "C_c61", "C_c62", "C_c71", "C_c72", "C_c81", "C_c82"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("lookup by id") {
  const CatalogEntry* e = find_entry("C_c1");
  REQUIRE(e != nullptr);
  const Matrix4 expected{o, 0, 0, 0,  //
                         0, o, 0, 0,  //
                         0, 0, 0, o,  //
                         0, 0, -o, 0};
  CHECK(max_abs_diff(e->declared, expected) == 0.0);
  CHECK(find_entry("C_c99") == nullptr);
}

TEST_CASE("every declared matrix is unitary") {
  for (const CatalogEntry& e : builtin_catalog()) {
    INFO(e.id);
    CHECK(is_unitary(e.declared, direct_tol));
  }
}

TEST_CASE("all sixteen family matrices are permutations with phases") {
  for (const CatalogEntry& e : builtin_catalog()) {
    if (e.id == "C_g") continue;
    INFO(e.id);
    for (int j = 0; j < 4; ++j) {
      int nonzero = 0;
      for (int i = 0; i < 4; ++i) {
        const Complex v = e.declared(i, j);
        if (std::abs(v) == 0.0) continue;
        ++nonzero;
        // entries are exact: one of +-1, +-i
        const bool known = v == o || v == -o || v == Complex{0.0, 1.0} || v == Complex{0.0, -1.0};
        CHECK(known);
      }
      CHECK(nonzero == 1);
    }
  }
}

TEST_CASE("audit of a clean entry") {
  const AuditRecord rec = audit_entry(*find_entry("C_c1"));
  CHECK(rec.r_matches_declared);
  CHECK(rec.exp_matches_declared);
  CHECK(rec.forms_agree);
  CHECK(rec.r_deviation <= direct_tol);
}

TEST_CASE("audit flags the mismatched exponential line of the phased gate") {
  const AuditRecord rec = audit_entry(*find_entry("C_g"));
  CHECK(rec.r_matches_declared);       // the rotation line reproduces the matrix
  CHECK(!rec.exp_matches_declared);    // the printed exponential line does not
  CHECK(!rec.forms_agree);
  CHECK(rec.forms_deviation > 0.1);
}

TEST_CASE("audit flags the sign slip in one family entry") {
  const AuditRecord rec = audit_entry(*find_entry("C_c51"));
  CHECK(rec.r_matches_declared);
  CHECK(!rec.exp_matches_declared);
  CHECK(!rec.forms_agree);

  // the printed exponential line is the one belonging to another entry
  const CatalogEntry* other = find_entry("C_c31");
  REQUIRE(other != nullptr);
  CHECK(max_abs_diff(rec.exp_product, other->declared) <= direct_tol);
}

TEST_CASE("every entry has at least one matching printed form") {
  for (const AuditRecord& rec : audit_catalog()) {
    INFO(rec.id);
    CHECK((rec.r_matches_declared || rec.exp_matches_declared));
    CHECK(rec.r_matches_declared);  // in fact the rotation line always matches
  }
}

TEST_CASE("audit output is deterministic") {
  const auto first = audit_catalog();
  const auto second = audit_catalog();
  REQUIRE(first.size() == second.size());
  Json a = Json::array(), b = Json::array();
  for (const AuditRecord& r : first) a.push_back(audit_record_to_json(r));
  for (const AuditRecord& r : second) b.push_back(audit_record_to_json(r));
  CHECK(a.dump() == b.dump());
}
