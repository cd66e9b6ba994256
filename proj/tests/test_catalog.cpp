/**
 * @file test_catalog.cpp
 * @brief Builtin catalog integrity: entry inventory, battery verification of
 *        every stored variant, the expected-algebra regression, and agreement
 *        between stored variants and fresh enumeration.
 */
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "mfc/catalog.hpp"
#include "mfc/errors.hpp"
#include "mfc/etale.hpp"
#include "mfc/report.hpp"
#include "test_util.hpp"

namespace {

struct EntryShape {
  const char* id;
  int variants;
  int unitary;
};

const std::vector<EntryShape> kInventory = {
    {"vect_c", 1, 1},        {"vec_z2", 8, 4},     {"fib", 8, 4},
    {"vec_z3", 4, 4},        {"ising", 32, 16},    {"psu2_5", 12, 4},
    {"z2z2_product", 20, 6}, {"toric_code", 10, 4}, {"vec_z4", 16, 8},
    {"su2_3", 32, 8},        {"fib_fib", 20, 6},   {"psu2_7", 12, 4},
    {"su5_1", 4, 4},         {"su2_4", 16, 8},     {"psu2_9", 20, 4},
    {"psu3_4", 12, 4},
};

}  // namespace

TEST_CASE("catalog: inventory of entries, variants, and unitary sub-counts") {
  const auto& cat = mfc::builtin_catalog();
  REQUIRE(cat.size() == kInventory.size());
  int total = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(kInventory[i].id);
    CHECK(cat[i].id == kInventory[i].id);
    CHECK(static_cast<int>(cat[i].variants.size()) == kInventory[i].variants);
    int unitary = 0;
    for (const mfc::CatalogVariant& v : cat[i].variants) unitary += v.unitary;
    CHECK(unitary == kInventory[i].unitary);
    total += static_cast<int>(cat[i].variants.size());
    CHECK_FALSE(cat[i].display_name.empty());
  }
  CHECK(total == 227);
  // The Ising ring is the one place where the numeric battery alone
  // over-accepts, and the catalog says so.
  for (const mfc::CatalogEntry& entry : cat)
    CHECK(entry.battery_insufficient == (entry.id == "ising"));
}

TEST_CASE("catalog: every stored variant passes the consistency battery") {
  for (const mfc::CatalogEntry& entry : mfc::builtin_catalog())
    for (std::size_t k = 0; k < entry.variants.size(); ++k) {
      CAPTURE(entry.id);
      CAPTURE(k);
      const mfc::ModularData md = testutil::variant_md(entry, static_cast<int>(k));
      CHECK(mfc::is_modular(md).ok());
      CHECK(mfc::is_unitary(md) == entry.variants[k].unitary);
      CHECK(md.h[0] == mfc::Rational(0));
    }
}

TEST_CASE("catalog: classification reproduces the expected algebras everywhere") {
  for (const mfc::CatalogEntry& entry : mfc::builtin_catalog()) {
    mfc::NimrepCache cache;
    for (int k = 0; k < static_cast<int>(entry.variants.size()); ++k) {
      CAPTURE(entry.id);
      CAPTURE(k);
      const mfc::ClassificationRecord rec = mfc::classify_variant(entry, k, &cache);
      REQUIRE(rec.error.empty());
      CHECK_FALSE(rec.partial);
      CHECK(rec.central_charge_mod_8.has_value());

      // Survivors found by the chain vs. survivors the catalog expects here.
      std::set<std::vector<int>> found;
      for (const mfc::AlgebraResult& res : rec.etale.algebras)
        if (res.verdict == mfc::AlgebraVerdict::etale ||
            res.verdict == mfc::AlgebraVerdict::needs_confirmation)
          found.insert(res.n);
      std::set<std::vector<int>> expected;
      for (const mfc::ExpectedAlgebra& alg : entry.algebras)
        for (int idx : alg.variant_indices)
          if (idx == k) expected.insert(alg.n);
      CHECK(found == expected);

      for (const mfc::ExpectedAlgebra& alg : entry.algebras) {
        bool here = false;
        for (int idx : alg.variant_indices) here = here || idx == k;
        if (!here) continue;
        for (const mfc::AlgebraResult& res : rec.etale.algebras) {
          if (res.n != alg.n) continue;
          CHECK(res.rank_BA == alg.rank_ba);
          CHECK(res.quotient.lagrangian == alg.lagrangian);
          CHECK(res.ba_name == alg.ba_name);
          CHECK(res.confirmed_by == alg.confirmed_by);
        }
      }
    }
  }
}

TEST_CASE("catalog: fresh enumeration reproduces the stored variants") {
  // Entries sharing one fusion ring enumerate together; the Ising ring is
  // excluded because its battery admits a continuum of spurious twists.
  const std::vector<std::vector<std::string>> groups = {
      {"vect_c"},  {"vec_z2"}, {"fib"},    {"vec_z3"},
      {"psu2_5"},  {"z2z2_product", "toric_code"}, {"vec_z4"},
      {"su2_3"},   {"fib_fib"}, {"psu2_7"}, {"su5_1"},
      {"su2_4"},   {"psu2_9"},  {"psu3_4"},
  };
  for (const auto& group : groups) {
    CAPTURE(group.front());
    const mfc::CatalogEntry& lead = mfc::load_builtin(group.front());
    const auto autos = mfc::automorphisms(lead.ring);

    std::set<std::string> catalog_keys;
    for (const std::string& id : group)
      for (const mfc::CatalogVariant& v : mfc::load_builtin(id).variants)
        if (v.D_sign > 0)
          catalog_keys.insert(mfc::orbit_key(lead.ring, autos, v.d, v.h));

    const mfc::Enumeration e = mfc::enumerate_modular_data(lead.ring);
    std::set<std::string> enum_keys;
    for (const mfc::ModularData& md : e.variants)
      if (md.D_sign > 0)
        enum_keys.insert(mfc::orbit_key(lead.ring, autos, md.d, md.h));

    CHECK(enum_keys == catalog_keys);
    CHECK(e.orbit_count == catalog_keys.size());
  }
}

TEST_CASE("catalog: lookup and listing") {
  SUBCASE("unknown ids name the valid ones") {
    try {
      mfc::load_builtin("nope");
      FAIL("expected InvalidInput");
    } catch (const mfc::InvalidInput& err) {
      const std::string msg = err.what();
      CHECK(msg.find("unknown catalog id 'nope'") != std::string::npos);
      CHECK(msg.find("valid ids:") != std::string::npos);
      CHECK(msg.find("su2_4") != std::string::npos);
    }
  }
  SUBCASE("isomorphic rings share one listing row") {
    const auto rows = mfc::list_entries();
    CHECK(rows.size() == 15);
    int total = 0;
    bool merged_found = false;
    for (const mfc::CatalogRow& row : rows) {
      total += row.mfc_count;
      if (row.ids == "z2z2_product, toric_code") {
        merged_found = true;
        CHECK(row.mfc_count == 30);
        CHECK(row.rank == 4);
      }
    }
    CHECK(merged_found);
    CHECK(total == 227);
  }
  SUBCASE("confirmation tables") {
    const auto su24 = mfc::catalog_confirmations(mfc::load_builtin("su2_4"));
    REQUIRE(su24.size() == 1);
    CHECK(su24[0].n == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(su24[0].ba_name == "TY(Z/3Z)");
    CHECK(su24[0].source == "KO01");

    CHECK(mfc::catalog_confirmations(mfc::load_builtin("toric_code")).size() == 3);
    CHECK(mfc::catalog_confirmations(mfc::load_builtin("z2z2_product")).size() == 1);
    const auto ff = mfc::catalog_confirmations(mfc::load_builtin("fib_fib"));
    REQUIRE(ff.size() == 1);
    CHECK(ff[0].ba_name == "Fib");
    CHECK(ff[0].source == "BD11");
    CHECK(mfc::catalog_confirmations(mfc::load_builtin("fib")).empty());
  }
}
