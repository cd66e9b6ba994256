#pragma once
/**
 * @file nimrep.hpp
 * @brief Non-negative integer matrix representations (NIM-reps) of a fusion
 *        ring and identification of module objects over a candidate algebra.
 */
#include <optional>
#include <string>
#include <vector>

#include "mfc/fusion_ring.hpp"
#include "mfc/modular_data.hpp"

namespace mfc {

using IntMatrix = std::vector<std::vector<int>>;

/// dim x dim matrices n_i, one per simple object, with n_0 = 1,
/// n_i n_j = sum_k N_{ij}^k n_k and n_{i*} = n_i^T.
struct NimRep {
  int dim = 0;
  std::vector<IntMatrix> matrices;
};

/// Checks the defining identities; on failure *why names the first one broken.
bool is_nimrep(const FusionRing& ring, const NimRep& rep,
               std::string* why = nullptr);

/**
 * All NIM-reps of the given dimension up to simultaneous row/column
 * permutation, sorted canonically. Entry bounds come from the
 * Frobenius-Perron projector M = sum_i FP_i n_i (which satisfies
 * M^2 = FPdim(B) M), sharpened to a fixpoint through the diagonal of
 * n_i n_i^T; rows are filled under exact or interval sum-of-square budgets
 * and single-unknown products are derived instead of searched.
 * Dimensions above 8 throw InvalidInput.
 */
std::vector<NimRep> search_nimreps(const FusionRing& ring, int dim);

/// Decomposition of the module objects of a NIM-rep over the algebra
/// A = (+)_i n_i b_i, read off at an anchor column whose diagonal pattern
/// reproduces the algebra.
struct ModuleIdentification {
  int anchor = 0;
  std::vector<std::vector<int>> images;  ///< images[a][i] = mult of b_i in F(m_a)
  std::vector<double> module_qdims;      ///< quantum dims, unit normalized to 1
};

/**
 * Identifies module objects when the NIM-rep carries the algebra on its
 * diagonal at some column: images come from that anchor row of each n_i, and
 * the Frobenius-Perron dims of the images must reproduce
 * FPdim(B)/FPdim(A) as a sum of squares (tolerance 1e-6). Quantum dimensions
 * are taken relative to the algebra's quantum dimension, which must be
 * nonzero. Returns nullopt when no anchor passes.
 */
std::optional<ModuleIdentification> identify_modules(
    const ModularData& md, const std::vector<int>& algebra, const NimRep& rep);

}  // namespace mfc
