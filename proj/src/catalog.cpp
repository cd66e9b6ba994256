#include "mfc/catalog.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <utility>

#include "mfc/errors.hpp"

namespace mfc {
namespace {

using std::numbers::pi;

/// Golden ratio (1 + sqrt 5) / 2, the Fibonacci Frobenius-Perron dimension.
const double kZeta = (1.0 + std::sqrt(5.0)) / 2.0;

FusionTensor blank(int r) {
  return FusionTensor(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

/** Adds a (x) b = (+) of the listed summands, and the mirror product b (x) a. */
void prod(FusionTensor& N, int a, int b, std::initializer_list<int> ks) {
  for (int k : ks) {
    N[a][b][k] += 1;
    if (a != b) N[b][a][k] += 1;
  }
}

/** Fills unit products, derives duals, and validates the ring axioms. */
FusionRing finish_ring(std::vector<std::string> labels, FusionTensor N) {
  const int r = static_cast<int>(labels.size());
  for (int i = 0; i < r; ++i) {
    N[0][i][i] = 1;
    if (i != 0) N[i][0][i] = 1;
  }
  FusionRing ring = make_fusion_ring(std::move(labels), std::move(N));
  require_valid(ring);
  return ring;
}

FusionRing ring_trivial() { return finish_ring({"1"}, blank(1)); }

FusionRing ring_z2() {
  auto N = blank(2);
  prod(N, 1, 1, {0});
  return finish_ring({"1", "X"}, std::move(N));
}

FusionRing ring_fib() {
  auto N = blank(2);
  prod(N, 1, 1, {0, 1});
  return finish_ring({"1", "X"}, std::move(N));
}

FusionRing ring_z3() {
  auto N = blank(3);
  prod(N, 1, 1, {2});
  prod(N, 1, 2, {0});
  prod(N, 2, 2, {1});
  return finish_ring({"1", "X", "Y"}, std::move(N));
}

FusionRing ring_ising() {
  auto N = blank(3);
  prod(N, 1, 1, {0});
  prod(N, 1, 2, {2});
  prod(N, 2, 2, {0, 1});
  return finish_ring({"1", "X", "Y"}, std::move(N));
}

FusionRing ring_psu2_5() {
  auto N = blank(3);
  prod(N, 1, 1, {0, 2});
  prod(N, 1, 2, {1, 2});
  prod(N, 2, 2, {0, 1, 2});
  return finish_ring({"1", "X", "Y"}, std::move(N));
}

FusionRing ring_z2z2() {
  auto N = blank(4);
  prod(N, 1, 1, {0});
  prod(N, 1, 2, {3});
  prod(N, 1, 3, {2});
  prod(N, 2, 2, {0});
  prod(N, 2, 3, {1});
  prod(N, 3, 3, {0});
  return finish_ring({"1", "X", "Y", "Z"}, std::move(N));
}

FusionRing ring_z4() {
  auto N = blank(4);
  prod(N, 1, 1, {2});
  prod(N, 1, 2, {3});
  prod(N, 1, 3, {0});
  prod(N, 2, 2, {0});
  prod(N, 2, 3, {1});
  prod(N, 3, 3, {2});
  return finish_ring({"1", "X", "Y", "Z"}, std::move(N));
}

FusionRing ring_su2_3() {
  auto N = blank(4);
  prod(N, 1, 1, {0});
  prod(N, 1, 2, {3});
  prod(N, 1, 3, {2});
  prod(N, 2, 2, {0, 2});
  prod(N, 2, 3, {1, 3});
  prod(N, 3, 3, {0, 2});
  return finish_ring({"1", "X", "Y", "Z"}, std::move(N));
}

FusionRing ring_fib_fib() {
  auto N = blank(4);
  prod(N, 1, 1, {0, 1});
  prod(N, 1, 2, {3});
  prod(N, 1, 3, {2, 3});
  prod(N, 2, 2, {0, 2});
  prod(N, 2, 3, {1, 3});
  prod(N, 3, 3, {0, 1, 2, 3});
  return finish_ring({"1", "X", "Y", "Z"}, std::move(N));
}

FusionRing ring_psu2_7() {
  auto N = blank(4);
  prod(N, 1, 1, {0, 2});
  prod(N, 1, 2, {1, 3});
  prod(N, 1, 3, {2, 3});
  prod(N, 2, 2, {0, 2, 3});
  prod(N, 2, 3, {1, 2, 3});
  prod(N, 3, 3, {0, 1, 2, 3});
  return finish_ring({"1", "X", "Y", "Z"}, std::move(N));
}

FusionRing ring_su5_1() {
  auto N = blank(5);
  prod(N, 1, 1, {4});
  prod(N, 1, 2, {0});
  prod(N, 1, 3, {2});
  prod(N, 1, 4, {3});
  prod(N, 2, 2, {3});
  prod(N, 2, 3, {4});
  prod(N, 2, 4, {1});
  prod(N, 3, 3, {1});
  prod(N, 3, 4, {0});
  prod(N, 4, 4, {2});
  return finish_ring({"1", "X", "Y", "Z", "W"}, std::move(N));
}

FusionRing ring_su2_4() {
  auto N = blank(5);
  prod(N, 1, 1, {0});
  prod(N, 1, 2, {3});
  prod(N, 1, 3, {2});
  prod(N, 1, 4, {4});
  prod(N, 2, 2, {0, 4});
  prod(N, 2, 3, {1, 4});
  prod(N, 2, 4, {2, 3});
  prod(N, 3, 3, {0, 4});
  prod(N, 3, 4, {2, 3});
  prod(N, 4, 4, {0, 1, 4});
  return finish_ring({"1", "X", "Y", "Z", "W"}, std::move(N));
}

FusionRing ring_psu2_9() {
  auto N = blank(5);
  prod(N, 1, 1, {0, 2});
  prod(N, 1, 2, {1, 3});
  prod(N, 1, 3, {2, 4});
  prod(N, 1, 4, {3, 4});
  prod(N, 2, 2, {0, 2, 4});
  prod(N, 2, 3, {1, 3, 4});
  prod(N, 2, 4, {2, 3, 4});
  prod(N, 3, 3, {0, 2, 3, 4});
  prod(N, 3, 4, {1, 2, 3, 4});
  prod(N, 4, 4, {0, 1, 2, 3, 4});
  return finish_ring({"1", "X", "Y", "Z", "W"}, std::move(N));
}

FusionRing ring_psu3_4() {
  auto N = blank(5);
  prod(N, 1, 1, {0, 1, 2});
  prod(N, 1, 2, {1, 2, 3, 4});
  prod(N, 1, 3, {2, 4});
  prod(N, 1, 4, {2, 3});
  prod(N, 2, 2, {0, 1, 2, 2, 3, 4});
  prod(N, 2, 3, {1, 2, 3});
  prod(N, 2, 4, {1, 2, 4});
  prod(N, 3, 3, {1, 4});
  prod(N, 3, 4, {0, 2});
  prod(N, 4, 4, {1, 3});
  return finish_ring({"1", "X", "Y", "Z", "W"}, std::move(N));
}

Rational q(long long num, long long den) { return Rational(num, den); }

/** Appends one quantum-dimension solution with its conformal-dimension
 *  patterns, each realized with both signs of the total dimension. */
void add_variants(std::vector<CatalogVariant>& out, std::vector<double> d,
                  std::initializer_list<std::vector<Rational>> h_patterns) {
  for (const auto& h : h_patterns) {
    out.push_back(CatalogVariant{d, h, +1, false});
    out.push_back(CatalogVariant{d, h, -1, false});
  }
}

/** Computes per-variant unitarity (quantum = Frobenius-Perron dimensions). */
void finalize(CatalogEntry& entry) {
  const FPData fp = fpdim(entry.ring);
  for (CatalogVariant& v : entry.variants) {
    bool unitary = true;
    for (int i = 0; i < entry.ring.rank; ++i)
      if (std::abs(v.d[i] - fp.fpdim_simple[i]) > 1e-6) unitary = false;
    v.unitary = unitary;
  }
}

std::vector<int> range_indices(int count) {
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  return idx;
}

CatalogEntry entry_vect_c() {
  CatalogEntry e;
  e.id = "vect_c";
  e.display_name = "Vect_C";
  e.ring = ring_trivial();
  e.variants.push_back(CatalogVariant{{1.0}, {q(0, 1)}, +1, false});
  e.anisotropy = "Yes";
  e.notes = "KK23";
  return e;
}

CatalogEntry entry_vec_z2() {
  CatalogEntry e;
  e.id = "vec_z2";
  e.display_name = "Vec_{Z/2Z}^{-1}";
  e.ring = ring_z2();
  add_variants(e.variants, {1, 1}, {{q(0, 1), q(1, 4)}, {q(0, 1), q(3, 4)}});
  add_variants(e.variants, {1, -1}, {{q(0, 1), q(1, 4)}, {q(0, 1), q(3, 4)}});
  e.anisotropy = "Yes (all 8)";
  e.notes = "KO01, KK23";
  return e;
}

CatalogEntry entry_fib() {
  CatalogEntry e;
  e.id = "fib";
  e.display_name = "Fib";
  e.ring = ring_fib();
  add_variants(e.variants, {1, kZeta}, {{q(0, 1), q(2, 5)}, {q(0, 1), q(3, 5)}});
  add_variants(e.variants, {1, -1 / kZeta},
               {{q(0, 1), q(1, 5)}, {q(0, 1), q(4, 5)}});
  e.anisotropy = "Yes (all 8)";
  e.notes = "BD11, KK23";
  return e;
}

CatalogEntry entry_vec_z3() {
  CatalogEntry e;
  e.id = "vec_z3";
  e.display_name = "Vec_{Z/3Z}^1";
  e.ring = ring_z3();
  add_variants(e.variants, {1, 1, 1},
               {{q(0, 1), q(1, 3), q(1, 3)}, {q(0, 1), q(2, 3), q(2, 3)}});
  e.anisotropy = "Yes (all 4)";
  e.notes = "EP09, KK23";
  return e;
}

CatalogEntry entry_ising() {
  CatalogEntry e;
  e.id = "ising";
  e.display_name = "Ising";
  e.ring = ring_ising();
  const double r2 = std::sqrt(2.0);
  for (double dY : {r2, -r2}) {
    std::initializer_list<std::vector<Rational>> patterns = {
        {q(0, 1), q(1, 2), q(1, 16)},  {q(0, 1), q(1, 2), q(3, 16)},
        {q(0, 1), q(1, 2), q(5, 16)},  {q(0, 1), q(1, 2), q(7, 16)},
        {q(0, 1), q(1, 2), q(9, 16)},  {q(0, 1), q(1, 2), q(11, 16)},
        {q(0, 1), q(1, 2), q(13, 16)}, {q(0, 1), q(1, 2), q(15, 16)}};
    add_variants(e.variants, {1, 1, dY}, patterns);
  }
  e.anisotropy = "Yes (all 32)";
  e.notes = "KO01, KL02, EM21, G23, KK23";
  e.battery_insufficient = true;
  return e;
}

CatalogEntry entry_psu2_5() {
  CatalogEntry e;
  e.id = "psu2_5";
  e.display_name = "psu(2)_5";
  e.ring = ring_psu2_5();
  const double a1 = 2.0 * std::cos(3.0 * pi / 7.0);
  const double a2 = 2.0 * std::cos(5.0 * pi / 7.0);
  const double a3 = 2.0 * std::cos(pi / 7.0);
  add_variants(e.variants, {1, a1, a1 * a1 - 1},
               {{q(0, 1), q(3, 7), q(1, 7)}, {q(0, 1), q(4, 7), q(6, 7)}});
  add_variants(e.variants, {1, a2, a2 * a2 - 1},
               {{q(0, 1), q(2, 7), q(3, 7)}, {q(0, 1), q(5, 7), q(4, 7)}});
  add_variants(e.variants, {1, a3, a3 * a3 - 1},
               {{q(0, 1), q(1, 7), q(5, 7)}, {q(0, 1), q(6, 7), q(2, 7)}});
  e.anisotropy = "Yes (all 12)";
  e.notes = "KK23";
  return e;
}

CatalogEntry entry_z2z2_product() {
  CatalogEntry e;
  e.id = "z2z2_product";
  e.display_name = "Vec_{Z/2Z}^{-1} x Vec_{Z/2Z}^{-1}";
  e.ring = ring_z2z2();
  add_variants(e.variants, {1, 1, 1, 1},
               {{q(0, 1), q(1, 4), q(1, 4), q(1, 2)},
                {q(0, 1), q(1, 4), q(3, 4), q(0, 1)},
                {q(0, 1), q(3, 4), q(3, 4), q(1, 2)}});
  add_variants(e.variants, {1, 1, -1, -1},
               {{q(0, 1), q(1, 4), q(1, 4), q(1, 2)},
                {q(0, 1), q(1, 4), q(3, 4), q(0, 1)},
                {q(0, 1), q(3, 4), q(1, 4), q(0, 1)},
                {q(0, 1), q(3, 4), q(3, 4), q(1, 2)}});
  add_variants(e.variants, {1, -1, -1, 1},
               {{q(0, 1), q(1, 4), q(1, 4), q(1, 2)},
                {q(0, 1), q(1, 4), q(3, 4), q(0, 1)},
                {q(0, 1), q(3, 4), q(3, 4), q(1, 2)}});
  e.algebras.push_back(ExpectedAlgebra{
      {1, 0, 0, 1}, "Vec_{Z/2Z}^alpha", 2, true, "", {2, 3, 16, 17}});
  e.anisotropy = "No (four with (d_Z,h_Z)=(1,0)) / Yes (the other 16)";
  e.notes = "RSW07";
  return e;
}

CatalogEntry entry_toric_code() {
  CatalogEntry e;
  e.id = "toric_code";
  e.display_name = "Toric Code";
  e.ring = ring_z2z2();
  add_variants(e.variants, {1, 1, 1, 1},
               {{q(0, 1), q(1, 2), q(0, 1), q(0, 1)},
                {q(0, 1), q(1, 2), q(1, 2), q(1, 2)}});
  add_variants(e.variants, {1, 1, -1, -1},
               {{q(0, 1), q(1, 2), q(0, 1), q(0, 1)},
                {q(0, 1), q(0, 1), q(1, 2), q(0, 1)},
                {q(0, 1), q(1, 2), q(1, 2), q(1, 2)}});
  e.algebras.push_back(
      ExpectedAlgebra{{1, 0, 1, 0}, "Vec_{Z/2Z}^alpha", 2, true, "", {0, 1}});
  e.algebras.push_back(
      ExpectedAlgebra{{1, 0, 0, 1}, "Vec_{Z/2Z}^alpha", 2, true, "", {0, 1}});
  e.algebras.push_back(
      ExpectedAlgebra{{1, 1, 0, 0}, "Vec_{Z/2Z}^alpha", 2, true, "", {6, 7}});
  e.anisotropy =
      "No (four with a nontrivial (d,h)=(1,0) object) / Yes (the other six)";
  e.notes = "RSW07";
  return e;
}

CatalogEntry entry_vec_z4() {
  CatalogEntry e;
  e.id = "vec_z4";
  e.display_name = "Vec_{Z/4Z}^alpha";
  e.ring = ring_z4();
  for (std::vector<double> d :
       {std::vector<double>{1, 1, 1, 1}, std::vector<double>{1, -1, 1, -1}}) {
    add_variants(e.variants, d,
                 {{q(0, 1), q(1, 8), q(1, 2), q(1, 8)},
                  {q(0, 1), q(3, 8), q(1, 2), q(3, 8)},
                  {q(0, 1), q(5, 8), q(1, 2), q(5, 8)},
                  {q(0, 1), q(7, 8), q(1, 2), q(7, 8)}});
  }
  e.anisotropy = "Yes (all 16)";
  e.notes = "CEM23";
  return e;
}

CatalogEntry entry_su2_3() {
  CatalogEntry e;
  e.id = "su2_3";
  e.display_name = "su(2)_3";
  e.ring = ring_su2_3();
  std::initializer_list<std::vector<Rational>> zeta_patterns = {
      {q(0, 1), q(1, 4), q(2, 5), q(13, 20)},
      {q(0, 1), q(1, 4), q(3, 5), q(17, 20)},
      {q(0, 1), q(3, 4), q(2, 5), q(3, 20)},
      {q(0, 1), q(3, 4), q(3, 5), q(7, 20)}};
  std::initializer_list<std::vector<Rational>> conj_patterns = {
      {q(0, 1), q(1, 4), q(1, 5), q(9, 20)},
      {q(0, 1), q(1, 4), q(4, 5), q(1, 20)},
      {q(0, 1), q(3, 4), q(1, 5), q(19, 20)},
      {q(0, 1), q(3, 4), q(4, 5), q(11, 20)}};
  add_variants(e.variants, {1, 1, kZeta, kZeta}, zeta_patterns);
  add_variants(e.variants, {1, -1, kZeta, -kZeta}, zeta_patterns);
  add_variants(e.variants, {1, 1, -1 / kZeta, -1 / kZeta}, conj_patterns);
  add_variants(e.variants, {1, -1, -1 / kZeta, 1 / kZeta}, conj_patterns);
  e.anisotropy = "Yes (all 32)";
  e.notes = "KO01";
  return e;
}

CatalogEntry entry_fib_fib() {
  CatalogEntry e;
  e.id = "fib_fib";
  e.display_name = "Fib x Fib";
  e.ring = ring_fib_fib();
  const double z = kZeta;
  add_variants(e.variants, {1, z, z, z * z},
               {{q(0, 1), q(2, 5), q(2, 5), q(4, 5)},
                {q(0, 1), q(2, 5), q(3, 5), q(0, 1)},
                {q(0, 1), q(3, 5), q(3, 5), q(1, 5)}});
  add_variants(e.variants, {1, z, -1 / z, -1},
               {{q(0, 1), q(2, 5), q(1, 5), q(3, 5)},
                {q(0, 1), q(2, 5), q(4, 5), q(1, 5)},
                {q(0, 1), q(3, 5), q(1, 5), q(4, 5)},
                {q(0, 1), q(3, 5), q(4, 5), q(2, 5)}});
  add_variants(e.variants, {1, -1 / z, -1 / z, 1 / (z * z)},
               {{q(0, 1), q(1, 5), q(1, 5), q(2, 5)},
                {q(0, 1), q(1, 5), q(4, 5), q(0, 1)},
                {q(0, 1), q(4, 5), q(4, 5), q(3, 5)}});
  e.algebras.push_back(
      ExpectedAlgebra{{1, 0, 0, 1}, "Fib", 2, true, "BD11", {2, 3, 16, 17}});
  e.anisotropy = "No (four with h_Z=0) / Yes (the other 16)";
  e.notes = "BD11";
  return e;
}

CatalogEntry entry_psu2_7() {
  CatalogEntry e;
  e.id = "psu2_7";
  e.display_name = "psu(2)_7";
  e.ring = ring_psu2_7();
  const double c1 = std::cos(pi / 18.0);
  const double s29 = std::sin(2.0 * pi / 9.0);
  const double s19 = std::sin(pi / 9.0);
  const std::vector<double> d1 = {1, -std::sin(pi / 9.0) / c1,
                                  -std::sin(pi / 3.0) / c1,
                                  1 - std::sin(pi / 9.0) / c1};
  const std::vector<double> d2 = {1, -c1 / s29, std::sin(pi / 3.0) / s29,
                                  1 - c1 / s29};
  const std::vector<double> d3 = {1, s29 / s19, std::sin(3.0 * pi / 9.0) / s19,
                                  std::sin(4.0 * pi / 9.0) / s19};
  add_variants(e.variants, d1,
               {{q(0, 1), q(1, 3), q(8, 9), q(2, 3)},
                {q(0, 1), q(2, 3), q(1, 9), q(1, 3)}});
  add_variants(e.variants, d2,
               {{q(0, 1), q(1, 3), q(5, 9), q(2, 3)},
                {q(0, 1), q(2, 3), q(4, 9), q(1, 3)}});
  add_variants(e.variants, d3,
               {{q(0, 1), q(1, 3), q(2, 9), q(2, 3)},
                {q(0, 1), q(2, 3), q(7, 9), q(1, 3)}});
  e.anisotropy = "Yes (all 12)";
  return e;
}

CatalogEntry entry_su5_1() {
  CatalogEntry e;
  e.id = "su5_1";
  e.display_name = "su(5)_1";
  e.ring = ring_su5_1();
  add_variants(e.variants, {1, 1, 1, 1, 1},
               {{q(0, 1), q(1, 5), q(1, 5), q(4, 5), q(4, 5)},
                {q(0, 1), q(2, 5), q(2, 5), q(3, 5), q(3, 5)}});
  e.anisotropy = "Yes (all 4)";
  e.notes = "G23";
  return e;
}

CatalogEntry entry_su2_4() {
  CatalogEntry e;
  e.id = "su2_4";
  e.display_name = "su(2)_4";
  e.ring = ring_su2_4();
  const double r3 = std::sqrt(3.0);
  std::initializer_list<std::vector<Rational>> patterns = {
      {q(0, 1), q(0, 1), q(1, 8), q(5, 8), q(1, 3)},
      {q(0, 1), q(0, 1), q(1, 8), q(5, 8), q(2, 3)},
      {q(0, 1), q(0, 1), q(3, 8), q(7, 8), q(1, 3)},
      {q(0, 1), q(0, 1), q(3, 8), q(7, 8), q(2, 3)}};
  add_variants(e.variants, {1, 1, -r3, -r3, 2}, patterns);
  add_variants(e.variants, {1, 1, r3, r3, 2}, patterns);
  e.algebras.push_back(ExpectedAlgebra{
      {1, 1, 0, 0, 0}, "TY(Z/3Z)", 4, false, "KO01", range_indices(16)});
  e.anisotropy = "No (1+X is etale in all 16)";
  e.notes = "KO01";
  return e;
}

CatalogEntry entry_psu2_9() {
  CatalogEntry e;
  e.id = "psu2_9";
  e.display_name = "psu(2)_9";
  e.ring = ring_psu2_9();
  auto s = [](int k) { return std::sin(k * pi / 11.0); };
  auto c = [](int k) { return std::cos(k * pi / 22.0); };
  const std::vector<double> d1 = {1, s(1) / c(1), -s(4) / c(1), -s(2) / c(1),
                                  s(3) / c(1)};
  const std::vector<double> d2 = {1, -s(3) / c(3), -s(1) / c(3), s(5) / c(3),
                                  -s(2) / c(3)};
  const std::vector<double> d3 = {1, s(5) / s(3), s(2) / s(3), -s(1) / s(3),
                                  -s(4) / s(3)};
  const std::vector<double> d4 = {1, -s(4) / s(2), s(5) / s(2), -s(3) / s(2),
                                  s(1) / s(2)};
  const std::vector<double> d5 = {1, s(2) / s(1), s(3) / s(1), s(4) / s(1),
                                  s(5) / s(1)};
  add_variants(e.variants, d1,
               {{q(0, 1), q(1, 11), q(10, 11), q(5, 11), q(8, 11)},
                {q(0, 1), q(10, 11), q(1, 11), q(6, 11), q(3, 11)}});
  add_variants(e.variants, d2,
               {{q(0, 1), q(3, 11), q(8, 11), q(4, 11), q(2, 11)},
                {q(0, 1), q(8, 11), q(3, 11), q(7, 11), q(9, 11)}});
  add_variants(e.variants, d3,
               {{q(0, 1), q(5, 11), q(6, 11), q(3, 11), q(7, 11)},
                {q(0, 1), q(6, 11), q(5, 11), q(8, 11), q(4, 11)}});
  add_variants(e.variants, d4,
               {{q(0, 1), q(4, 11), q(7, 11), q(9, 11), q(10, 11)},
                {q(0, 1), q(7, 11), q(4, 11), q(2, 11), q(1, 11)}});
  add_variants(e.variants, d5,
               {{q(0, 1), q(2, 11), q(9, 11), q(10, 11), q(5, 11)},
                {q(0, 1), q(9, 11), q(2, 11), q(1, 11), q(6, 11)}});
  e.anisotropy = "Yes (all 20)";
  return e;
}

CatalogEntry entry_psu3_4() {
  CatalogEntry e;
  e.id = "psu3_4";
  e.display_name = "psu(3)_4";
  e.ring = ring_psu3_4();
  auto t = [](int k) { return std::sin(k * pi / 14.0); };
  const double c27 = std::cos(2.0 * pi / 7.0);
  const std::vector<double> d1 = {1, -t(1) / t(5), -t(3) / t(5),
                                  1 / (2 * t(5)), 1 / (2 * t(5))};
  const std::vector<double> d2 = {1, t(5) / c27, -t(1) / c27, -1 / (2 * c27),
                                  -1 / (2 * c27)};
  const std::vector<double> d3 = {1, t(3) / t(1), t(5) / t(1), 1 / (2 * t(1)),
                                  1 / (2 * t(1))};
  add_variants(e.variants, d1,
               {{q(0, 1), q(2, 7), q(6, 7), q(5, 7), q(5, 7)},
                {q(0, 1), q(5, 7), q(1, 7), q(2, 7), q(2, 7)}});
  add_variants(e.variants, d2,
               {{q(0, 1), q(3, 7), q(2, 7), q(4, 7), q(4, 7)},
                {q(0, 1), q(4, 7), q(5, 7), q(3, 7), q(3, 7)}});
  add_variants(e.variants, d3,
               {{q(0, 1), q(1, 7), q(3, 7), q(6, 7), q(6, 7)},
                {q(0, 1), q(6, 7), q(4, 7), q(1, 7), q(1, 7)}});
  e.anisotropy = "Yes (all 12)";
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back(entry_vect_c());
  entries.push_back(entry_vec_z2());
  entries.push_back(entry_fib());
  entries.push_back(entry_vec_z3());
  entries.push_back(entry_ising());
  entries.push_back(entry_psu2_5());
  entries.push_back(entry_z2z2_product());
  entries.push_back(entry_toric_code());
  entries.push_back(entry_vec_z4());
  entries.push_back(entry_su2_3());
  entries.push_back(entry_fib_fib());
  entries.push_back(entry_psu2_7());
  entries.push_back(entry_su5_1());
  entries.push_back(entry_su2_4());
  entries.push_back(entry_psu2_9());
  entries.push_back(entry_psu3_4());
  for (CatalogEntry& e : entries) finalize(e);
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& load_builtin(const std::string& id) {
  for (const CatalogEntry& e : builtin_catalog())
    if (e.id == id) return e;
  std::ostringstream msg;
  msg << "unknown catalog id '" << id << "'; valid ids:";
  for (const CatalogEntry& e : builtin_catalog()) msg << " " << e.id;
  throw InvalidInput(msg.str());
}

std::vector<CatalogRow> list_entries() {
  std::vector<CatalogRow> rows;
  const auto& entries = builtin_catalog();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    // Entries sharing a fusion ring are shown merged, as one ring row.
    if (i + 1 < entries.size() &&
        is_isomorphic(e.ring, entries[i + 1].ring)) {
      const CatalogEntry& f = entries[i + 1];
      CatalogRow row;
      row.ids = e.id + ", " + f.id;
      row.display_name = e.display_name + " / " + f.display_name;
      row.rank = e.ring.rank;
      row.mfc_count =
          static_cast<int>(e.variants.size() + f.variants.size());
      row.anisotropy = e.display_name + ": " + e.anisotropy + "; " +
                       f.display_name + ": " + f.anisotropy;
      rows.push_back(std::move(row));
      ++i;
      continue;
    }
    rows.push_back(CatalogRow{e.id, e.display_name, e.ring.rank,
                              static_cast<int>(e.variants.size()),
                              e.anisotropy});
  }
  return rows;
}

std::vector<ConfirmationEntry> catalog_confirmations(const CatalogEntry& entry) {
  std::vector<ConfirmationEntry> out;
  for (const ExpectedAlgebra& alg : entry.algebras) {
    bool seen = false;
    for (const ConfirmationEntry& c : out)
      if (c.n == alg.n) seen = true;
    if (!seen) out.push_back(ConfirmationEntry{alg.n, alg.ba_name, alg.confirmed_by});
  }
  return out;
}

}  // namespace mfc
