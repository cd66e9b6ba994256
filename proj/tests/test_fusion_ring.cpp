/**
 * @file test_fusion_ring.cpp
 * @brief Fusion-ring construction, axiom validation, Frobenius-Perron data,
 *        automorphisms, and tensor products.
 */
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mfc/catalog.hpp"
#include "mfc/errors.hpp"
#include "mfc/fusion_ring.hpp"

using mfc::FusionRing;
using mfc::FusionTensor;

namespace {

FusionTensor zeros(int r) {
  return FusionTensor(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

bool has_axiom(const std::vector<mfc::ValidationIssue>& issues,
               const std::string& axiom) {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const mfc::ValidationIssue& is) { return is.axiom == axiom; });
}

}  // namespace

TEST_CASE("fusion ring: every builtin ring satisfies all axioms") {
  for (const mfc::CatalogEntry& entry : mfc::builtin_catalog()) {
    CAPTURE(entry.id);
    CHECK(mfc::validate_ring(entry.ring).empty());
    CHECK_NOTHROW(mfc::require_valid(entry.ring));
  }
}

TEST_CASE("fusion ring: structural mismatches are rejected at construction") {
  // Third tensor dimension disagrees with the label count.
  FusionTensor bad(2, std::vector<std::vector<int>>(2, std::vector<int>(3, 0)));
  CHECK_THROWS_AS(mfc::make_fusion_ring({"1", "X"}, bad), mfc::InvalidInput);
  // First tensor dimension disagrees.
  CHECK_THROWS_AS(mfc::make_fusion_ring({"1", "X"}, zeros(3)), mfc::InvalidInput);
  CHECK_THROWS_AS(mfc::make_fusion_ring({}, FusionTensor{}), mfc::InvalidInput);
}

TEST_CASE("fusion ring: axiom violations are reported, not thrown") {
  SUBCASE("an object without a dual") {
    // X * X = X never produces the unit, so X has no dual.
    FusionTensor N = zeros(2);
    N[0][0][0] = 1;
    N[0][1][1] = 1;
    N[1][0][1] = 1;
    N[1][1][1] = 1;
    const FusionRing ring = mfc::make_fusion_ring({"1", "X"}, N);
    const auto issues = mfc::validate_ring(ring);
    CHECK_FALSE(issues.empty());
    CHECK(has_axiom(issues, "duality"));
    CHECK(ring.dual[1] == -1);
    CHECK_THROWS_AS(mfc::require_valid(ring), mfc::InvalidInput);
  }
  SUBCASE("a non-associative product") {
    // Like Z/3 but with b*a = b instead of b*a = b*a^{-1}... the point is
    // only that (a b) a != a (b a).
    FusionTensor N = zeros(3);
    for (int j = 0; j < 3; ++j) N[0][j][j] = N[j][0][j] = 1;
    N[1][1][2] = 1;  // a a = b
    N[1][2][0] = 1;  // a b = 1
    N[2][1][2] = 1;  // b a = b   (broken on purpose)
    N[2][2][1] = 1;  // b b = a
    const FusionRing ring = mfc::make_fusion_ring({"1", "a", "b"}, N);
    const auto issues = mfc::validate_ring(ring);
    CHECK(has_axiom(issues, "associativity"));
  }
  SUBCASE("a negative structure constant") {
    FusionTensor N = zeros(2);
    N[0][0][0] = 1;
    N[0][1][1] = 1;
    N[1][0][1] = 1;
    N[1][1][0] = -1;
    const FusionRing ring = mfc::make_fusion_ring({"1", "X"}, N);
    CHECK(has_axiom(mfc::validate_ring(ring), "negativity"));
  }
}

TEST_CASE("fusion ring: duals come out of the tensor") {
  CHECK(mfc::load_builtin("fib").ring.dual == std::vector<int>{0, 1});
  CHECK(mfc::load_builtin("vec_z3").ring.dual == std::vector<int>{0, 2, 1});
  CHECK(mfc::load_builtin("vec_z4").ring.dual == std::vector<int>{0, 3, 2, 1});
  // Duals are paired adjacently: X*X = W, X*Y = 1, Z*W = 1.
  CHECK(mfc::load_builtin("su5_1").ring.dual == std::vector<int>{0, 2, 1, 4, 3});
  CHECK(mfc::load_builtin("fib").ring.self_dual(1));
  CHECK_FALSE(mfc::load_builtin("vec_z3").ring.self_dual(1));
}

TEST_CASE("fusion ring: Frobenius-Perron dimensions") {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  SUBCASE("Fibonacci") {
    const mfc::FPData fp = mfc::fpdim(mfc::load_builtin("fib").ring);
    REQUIRE(fp.fpdim_simple.size() == 2);
    CHECK(fp.fpdim_simple[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fp.fpdim_simple[1] == doctest::Approx(phi).epsilon(1e-10));
    CHECK(fp.fpdim_total == doctest::Approx(2.0 + phi).epsilon(1e-10));
  }
  SUBCASE("su(2)_4") {
    const mfc::FPData fp = mfc::fpdim(mfc::load_builtin("su2_4").ring);
    const double s3 = std::sqrt(3.0);
    const std::vector<double> expect = {1.0, 1.0, s3, s3, 2.0};
    REQUIRE(fp.fpdim_simple.size() == 5);
    for (int i = 0; i < 5; ++i)
      CHECK(fp.fpdim_simple[i] == doctest::Approx(expect[i]).epsilon(1e-10));
    CHECK(fp.fpdim_total == doctest::Approx(12.0).epsilon(1e-10));
  }
  SUBCASE("FP dimensions are a ring character") {
    for (const mfc::CatalogEntry& entry : mfc::builtin_catalog()) {
      CAPTURE(entry.id);
      const mfc::FPData fp = mfc::fpdim(entry.ring);
      const int r = entry.ring.rank;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          double sum = 0.0;
          for (int k = 0; k < r; ++k)
            sum += entry.ring.n(i, j, k) * fp.fpdim_simple[k];
          CHECK(fp.fpdim_simple[i] * fp.fpdim_simple[j] ==
                doctest::Approx(sum).epsilon(1e-9));
        }
    }
  }
}

TEST_CASE("fusion ring: automorphism groups") {
  auto order = [](const std::string& id) {
    return mfc::automorphisms(mfc::load_builtin(id).ring).size();
  };
  CHECK(order("fib") == 1);
  CHECK(order("fib_fib") == 2);       // swap the two Fibonacci factors
  CHECK(order("su2_4") == 2);         // swap the two dimension-sqrt(3) objects
  CHECK(order("su5_1") == 4);         // Aut(Z/5) fixing the unit
  CHECK(order("z2z2_product") == 6);  // S_3 on the three order-2 objects

  for (const mfc::CatalogEntry& entry : mfc::builtin_catalog()) {
    CAPTURE(entry.id);
    const auto autos = mfc::automorphisms(entry.ring);
    REQUIRE_FALSE(autos.empty());
    // Identity first, and each permutation preserves the tensor.
    for (int i = 0; i < entry.ring.rank; ++i) CHECK(autos.front()[i] == i);
    for (const auto& p : autos) {
      CHECK(p[0] == 0);
      for (int i = 0; i < entry.ring.rank; ++i)
        for (int j = 0; j < entry.ring.rank; ++j)
          for (int k = 0; k < entry.ring.rank; ++k)
            CHECK(entry.ring.n(i, j, k) == entry.ring.n(p[i], p[j], p[k]));
    }
  }
}

TEST_CASE("fusion ring: tensor products and isomorphism") {
  const FusionRing z2 = mfc::load_builtin("vec_z2").ring;
  const FusionRing fib = mfc::load_builtin("fib").ring;
  CHECK(mfc::is_isomorphic(mfc::tensor_product(z2, z2),
                           mfc::load_builtin("z2z2_product").ring));
  CHECK(mfc::is_isomorphic(mfc::tensor_product(fib, fib),
                           mfc::load_builtin("fib_fib").ring));
  // The Toric Code entry shares the product ring.
  CHECK(mfc::is_isomorphic(mfc::load_builtin("toric_code").ring,
                           mfc::load_builtin("z2z2_product").ring));
  CHECK_FALSE(mfc::is_isomorphic(fib, z2));
  CHECK_FALSE(mfc::is_isomorphic(mfc::load_builtin("z2z2_product").ring,
                                 mfc::load_builtin("vec_z4").ring));
}
