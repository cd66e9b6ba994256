/**
 * @file test_modular_data.cpp
 * @brief Quantum-dimension characters, the S/T consistency battery, central
 *        charge, and the exhaustive (d, h) enumeration.
 */
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "mfc/catalog.hpp"
#include "mfc/errors.hpp"
#include "mfc/modular_data.hpp"
#include "test_util.hpp"

using mfc::ModularData;
using mfc::Rational;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

/// Largest deviation of S from its transpose.
double symmetry_defect(const Eigen::MatrixXcd& S) {
  return (S - S.transpose()).cwiseAbs().maxCoeff();
}

/// Largest deviation of S^2 from D^2 C.
double s_squared_defect(const ModularData& md) {
  const Eigen::MatrixXcd S = mfc::s_matrix(md);
  const int r = md.ring.rank;
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(r, r);
  for (int i = 0; i < r; ++i) rhs(i, md.ring.dual[i]) = mfc::total_dim_squared(md);
  return (S * S - rhs).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("modular data: quantum dimension solutions are the real characters") {
  SUBCASE("Fibonacci has exactly the golden pair") {
    const auto sols = mfc::quantum_dim_solutions(mfc::load_builtin("fib").ring);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0][0] == doctest::Approx(1.0));
    CHECK(sols[0][1] == doctest::Approx(kPhi));
    CHECK(sols[1][0] == doctest::Approx(1.0));
    CHECK(sols[1][1] == doctest::Approx(-1.0 / kPhi));
  }
  SUBCASE("every solution of every builtin ring is a character") {
    for (const mfc::CatalogEntry& entry : mfc::builtin_catalog()) {
      CAPTURE(entry.id);
      const auto sols = mfc::quantum_dim_solutions(entry.ring);
      CHECK_FALSE(sols.empty());
      const int r = entry.ring.rank;
      for (const auto& d : sols) {
        CHECK(d[0] == doctest::Approx(1.0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) {
            double sum = 0.0;
            for (int k = 0; k < r; ++k) sum += entry.ring.n(i, j, k) * d[k];
            CHECK(d[i] * d[j] == doctest::Approx(sum).epsilon(1e-9));
          }
      }
    }
  }
}

TEST_CASE("modular data: build_modular rejects malformed assignments") {
  const mfc::FusionRing fib = mfc::load_builtin("fib").ring;
  CHECK_THROWS_AS(
      mfc::build_modular(fib, {1.0, kPhi}, {Rational(1, 2), Rational(0)}, +1),
      mfc::InvalidInput);
  CHECK_THROWS_AS(
      mfc::build_modular(fib, {1.0, 2.0}, {Rational(0), Rational(2, 5)}, +1),
      mfc::InvalidInput);
}

TEST_CASE("modular data: the consistency battery") {
  const mfc::FusionRing z2z2 = mfc::load_builtin("z2z2_product").ring;
  const std::vector<double> ones = {1, 1, 1, 1};
  SUBCASE("a modular assignment") {
    const ModularData md = mfc::build_modular(
        z2z2, ones, {Rational(0), Rational(1, 4), Rational(3, 4), Rational(0)}, +1);
    const mfc::ModularVerdict v = mfc::is_modular(md);
    CHECK(v.kind == mfc::ModularVerdict::Kind::modular);
    CHECK(v.ok());
    CHECK(v.diagnostic == "ok");
  }
  SUBCASE("a degenerate assignment (singular S)") {
    const ModularData md = mfc::build_modular(
        z2z2, ones,
        {Rational(0), Rational(1, 4), Rational(3, 4), Rational(1, 2)}, +1);
    const mfc::ModularVerdict v = mfc::is_modular(md);
    CHECK(v.kind == mfc::ModularVerdict::Kind::degenerate);
    CHECK_FALSE(v.ok());
  }
  SUBCASE("an inconsistent assignment (complex self-dual column)") {
    const ModularData md =
        mfc::build_modular(mfc::load_builtin("vec_z2").ring, {1, 1},
                           {Rational(0), Rational(1, 3)}, +1);
    CHECK(mfc::is_modular(md).kind == mfc::ModularVerdict::Kind::inconsistent);
  }
}

TEST_CASE("modular data: central charge mod 8") {
  SUBCASE("known theories") {
    const ModularData fib =
        mfc::build_modular(mfc::load_builtin("fib").ring, {1.0, kPhi},
                           {Rational(0), Rational(2, 5)}, +1);
    CHECK(mfc::central_charge(fib).c_mod_8 == Rational(14, 5));

    const ModularData triv =
        mfc::build_modular(mfc::load_builtin("vect_c").ring, {1.0}, {Rational(0)}, +1);
    CHECK(mfc::central_charge(triv).c_mod_8 == Rational(0));

    const ModularData semion =
        mfc::build_modular(mfc::load_builtin("vec_z2").ring, {1, 1},
                           {Rational(0), Rational(1, 4)}, +1);
    CHECK(mfc::central_charge(semion).c_mod_8 == Rational(1));
  }
  SUBCASE("flipping the total-dimension sign shifts c by 4") {
    const mfc::CatalogEntry& su24 = mfc::load_builtin("su2_4");
    const std::vector<Rational> h = {Rational(0), Rational(0), Rational(1, 8),
                                     Rational(5, 8), Rational(1, 3)};
    const double s3 = std::sqrt(3.0);
    const ModularData plus =
        mfc::build_modular(su24.ring, {1, 1, s3, s3, 2}, h, +1);
    const ModularData minus =
        mfc::build_modular(su24.ring, {1, 1, s3, s3, 2}, h, -1);
    CHECK(mfc::central_charge(plus).c_mod_8 == Rational(2));
    CHECK(mfc::central_charge(minus).c_mod_8 == Rational(6));
  }
  SUBCASE("non-modular input is rejected") {
    const ModularData degenerate = mfc::build_modular(
        mfc::load_builtin("z2z2_product").ring, {1, 1, 1, 1},
        {Rational(0), Rational(1, 4), Rational(3, 4), Rational(1, 2)}, +1);
    CHECK_THROWS_AS(mfc::central_charge(degenerate), mfc::InvalidInput);
  }
}

TEST_CASE("modular data: enumeration counts per ring") {
  struct Row {
    const char* id;
    std::size_t raw, orbits;
  };
  // raw = accepted assignments per total-dimension sign before orbit dedup;
  // orbits = representatives per sign; variants carry both signs.
  const std::vector<Row> table = {
      {"vect_c", 1, 1},   {"vec_z2", 4, 4},       {"fib", 4, 4},
      {"vec_z3", 2, 2},   {"psu2_5", 6, 6},       {"z2z2_product", 64, 15},
      {"vec_z4", 8, 8},   {"su2_3", 16, 16},      {"fib_fib", 16, 10},
      {"psu2_7", 6, 6},   {"su5_1", 4, 2},        {"su2_4", 16, 8},
      {"psu2_9", 10, 10}, {"psu3_4", 6, 6},
  };
  for (const Row& row : table) {
    CAPTURE(row.id);
    const mfc::Enumeration e =
        mfc::enumerate_modular_data(mfc::load_builtin(row.id).ring);
    CHECK(e.raw_count == row.raw);
    CHECK(e.orbit_count == row.orbits);
    CHECK(e.variants.size() == 2 * row.orbits);
  }
}

TEST_CASE("modular data: enumeration emits each orbit with both signs") {
  const mfc::Enumeration e =
      mfc::enumerate_modular_data(mfc::load_builtin("fib_fib").ring);
  REQUIRE(e.variants.size() == 20);
  for (std::size_t m = 0; m + 1 < e.variants.size(); m += 2) {
    CHECK(e.variants[m].D_sign == +1);
    CHECK(e.variants[m + 1].D_sign == -1);
    CHECK(testutil::approx_vec(e.variants[m].d, e.variants[m + 1].d));
    CHECK(e.variants[m].h == e.variants[m + 1].h);
  }
}

TEST_CASE("modular data: enumerated assignments satisfy the matrix identities") {
  for (const char* id : {"fib", "vec_z3", "su5_1", "su2_4"}) {
    CAPTURE(id);
    const mfc::Enumeration e =
        mfc::enumerate_modular_data(mfc::load_builtin(id).ring);
    for (const ModularData& md : e.variants) {
      CHECK(mfc::is_modular(md).ok());
      const Eigen::MatrixXcd S = mfc::s_matrix(md);
      CHECK(symmetry_defect(S) <= 1e-9 * mfc::total_dim_squared(md));
      CHECK(s_squared_defect(md) <= 1e-9 * mfc::total_dim_squared(md));
      for (int i = 0; i < md.ring.rank; ++i)
        if (md.ring.self_dual(i))
          for (int j = 0; j < md.ring.rank; ++j)
            CHECK(std::abs(std::imag(S(j, i))) <=
                  1e-9 * std::sqrt(mfc::total_dim_squared(md)));
      // central_charge re-verifies (S T)^3 against e^{2 pi i c/8} internally.
      CHECK_NOTHROW(mfc::central_charge(md));
    }
  }
}

TEST_CASE("modular data: orbit keys are automorphism invariants") {
  const mfc::FusionRing ring = mfc::load_builtin("fib_fib").ring;
  const auto autos = mfc::automorphisms(ring);
  REQUIRE(autos.size() == 2);
  const std::vector<double> d = {1.0, kPhi, kPhi, kPhi * kPhi};
  const std::vector<Rational> h = {Rational(0), Rational(2, 5), Rational(3, 5),
                                   Rational(0)};
  // Relabel every object through the nontrivial automorphism.
  const auto& sigma = autos[1];
  std::vector<double> d2(d.size());
  std::vector<Rational> h2(h.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d2[sigma[i]] = d[i];
    h2[sigma[i]] = h[i];
  }
  CHECK(h2 != h);  // the relabeling genuinely moves this assignment
  CHECK(mfc::orbit_key(ring, autos, d, h) == mfc::orbit_key(ring, autos, d2, h2));
}
