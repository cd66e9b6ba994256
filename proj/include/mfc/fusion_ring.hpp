#pragma once
/**
 * @file fusion_ring.hpp
 * @brief Fusion ring data (rank, fusion tensor, unit, duality) and
 *        Frobenius-Perron utilities.
 */
#include <string>
#include <vector>

namespace mfc {

/// rank x rank x rank tensor of non-negative structure constants,
/// N[i][j][k] = multiplicity of b_k in b_i (x) b_j.
using FusionTensor = std::vector<std::vector<std::vector<int>>>;

struct FusionRing {
  int rank = 0;
  std::vector<std::string> labels;
  FusionTensor N;
  int unit_index = 0;      ///< always 0 by convention
  std::vector<int> dual;   ///< dual[i] = i*, derived from N (-1 if undefined)

  int n(int i, int j, int k) const { return N[i][j][k]; }
  bool self_dual(int i) const { return dual[i] == i; }
};

struct FPData {
  std::vector<double> fpdim_simple;  ///< largest eigenvalue of each N_i
  double fpdim_total = 0.0;          ///< sum of squares
};

struct ValidationIssue {
  std::string axiom;   ///< "unit", "associativity", "duality", "negativity"
  std::string detail;
};

/**
 * Builds a ring from labels and a fusion tensor. Structural problems
 * (dimension mismatches) throw InvalidInput; axiom violations do not — they
 * are reported by validate_ring so a CLI user can see all of them at once.
 * Duals are derived as the unique partner with the unit in the product and
 * left as -1 where no such partner exists.
 */
FusionRing make_fusion_ring(std::vector<std::string> labels, FusionTensor N);

/// Checks unit, associativity, duality and non-negativity; empty iff valid.
std::vector<ValidationIssue> validate_ring(const FusionRing& ring);

/// Throws InvalidInput listing every violated axiom. Convenience wrapper.
void require_valid(const FusionRing& ring);

/// Frobenius-Perron dimensions via power iteration (residual 1e-12,
/// all-ones start vector; the Perron eigenpair of N_i is reached from there).
FPData fpdim(const FusionRing& ring);

/// All index permutations fixing the unit that preserve N, as a group
/// (closure and inverses are verified). Sorted lexicographically.
std::vector<std::vector<int>> automorphisms(const FusionRing& ring);

/// Deligne product: rank(a)*rank(b) ring on pair indices, duals componentwise.
FusionRing tensor_product(const FusionRing& a, const FusionRing& b);

/// True if sigma maps ring a onto ring b (N_b[sigma i][sigma j][sigma k] =
/// N_a[i][j][k]); used to recognize user rings up to relabeling.
bool is_isomorphic(const FusionRing& a, const FusionRing& b);

}  // namespace mfc
