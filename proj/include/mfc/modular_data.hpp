#pragma once
/**
 * @file modular_data.hpp
 * @brief Modular data (quantum dimensions, conformal dimensions, S/T matrices,
 *        central charge) over a fusion ring, plus exhaustive enumeration of
 *        all assignments passing the consistency battery.
 */
#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "mfc/fusion_ring.hpp"
#include "mfc/rational.hpp"

namespace mfc {

struct ModularData {
  FusionRing ring;
  std::vector<double> d;    ///< quantum dimensions, a real nonzero ring character
  std::vector<Rational> h;  ///< conformal dimensions mod 1, h[0] = 0
  int D_sign = +1;          ///< selects D(B) among the two square roots of D^2
};

/// All real nonzero solutions of the character system
/// d_i d_j = sum_k N_{i,j}^k d_k with d_0 = 1, complete and duplicate-free.
/// Seeded by the eigendecomposition of a generic combination of the fusion
/// matrices, then polished by Gauss-Newton to full double precision.
/// Sorted in descending lexicographic order for determinism.
std::vector<std::vector<double>> quantum_dim_solutions(const FusionRing& ring,
                                                       double tol = 1e-9);

/// Assembles ModularData after validating the inputs (d must be a character,
/// h[0] must vanish). Throws InvalidInput otherwise.
ModularData build_modular(const FusionRing& ring, std::vector<double> d,
                          std::vector<Rational> h, int D_sign, double tol = 1e-9);

/// Unnormalized S matrix: S[i][j] = sum_k N_{i,j}^k e^{2 pi i (h_k - h_i - h_j)} d_k.
Eigen::MatrixXcd s_matrix(const ModularData& md);
/// T = diag(e^{2 pi i h_i}).
Eigen::MatrixXcd t_matrix(const ModularData& md);
/// D^2 = sum d_i^2.
double total_dim_squared(const ModularData& md);
/// D = D_sign * sqrt(D^2).
double total_dim(const ModularData& md);
/// True iff d_i equals FPdim(b_i) for all i.
bool is_unitary(const ModularData& md, double tol = 1e-9);
/// True iff D^2 equals FPdim(B).
bool is_pseudo_unitary(const ModularData& md, double tol = 1e-9);

struct ModularVerdict {
  enum class Kind { modular, degenerate, inconsistent } kind;
  std::string diagnostic;  ///< names the failed condition, "ok" when modular
  bool ok() const { return kind == Kind::modular; }
};

/**
 * Consistency battery. Checks, in order:
 *  - S symmetric and S[i][dual j] = conj(S[i][j]) (reality on self-dual columns),
 *  - |det S| above tolerance relative to D^rank (else degenerate),
 *  - S^2 = D^2 C with C the duality permutation.
 * Violations of the first or third report inconsistent; a singular S with the
 * rest intact reports degenerate.
 */
ModularVerdict is_modular(const ModularData& md, double tol = 1e-9);

struct CentralChargeClass {
  Rational c_mod_8;  ///< in [0, 8)
};

/// Smallest-denominator rational c (den <= max_den) with
/// (S T)^3 = e^{2 pi i c / 8} S^2 for S normalized by D_sign * sqrt(D^2).
/// Throws InvalidInput if md fails the battery, InternalInconsistency if no
/// rational matches the measured phase.
CentralChargeClass central_charge(const ModularData& md, int max_den = 48,
                                  double tol = 1e-9);

struct Enumeration {
  std::vector<ModularData> variants;  ///< orbit representatives, both D_signs
  std::size_t raw_count = 0;          ///< accepted (d, h) per sign before dedup
  std::size_t orbit_count = 0;        ///< representatives per D_sign
};

/**
 * Enumerates every (d, h, D_sign) with h denominators <= max_den that passes
 * the full battery plus the ribbon identity (S T)^3 = p_+ S^2, keeping one
 * representative per orbit of the ring's automorphism group acting
 * simultaneously on d and h. Neither check involves D_sign, so each
 * representative appears with both signs.
 *
 * The search walks conformal dimensions coordinate-by-coordinate, evaluating
 * each duality/reality condition at the first depth where its support is
 * assigned; conditions whose S entries are single fusion channels are solved
 * exactly as linear congruences instead of scanned. Both are battery members,
 * so pruning never loses a battery-passing assignment; twists are forced to
 * agree between an object and its dual, which the ribbon identity implies.
 */
Enumeration enumerate_modular_data(const FusionRing& ring, int max_den = 48,
                                   double tol = 1e-9);

/// Canonical orbit key (lex-min image over the automorphism group) used for
/// dedup and order-independent set comparison of variants.
std::string orbit_key(const FusionRing& ring,
                      const std::vector<std::vector<int>>& autos,
                      const std::vector<double>& d, const std::vector<Rational>& h);

}  // namespace mfc
