#pragma once
/**
 * @file etale.hpp
 * @brief Candidate connected algebras in a modular fusion category and the
 *        filter chain that classifies them as etale, ruled out, or needing
 *        literature confirmation.
 */
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfc/modular_data.hpp"
#include "mfc/nimrep.hpp"

namespace mfc {

enum class AlgebraVerdict { trivial, etale, needs_confirmation, ruled_out };
enum class RuledOutReason {
  none,
  not_self_dual,
  pairing_phase,
  boson_criterion,
  separability,
  quotient_infeasible,
};

std::string verdict_name(AlgebraVerdict v);
std::string reason_name(RuledOutReason r);

/// Object multiset A = (+)_i n_i b_i with n_0 = 1.
struct AlgebraCandidate {
  std::vector<int> n;
  double fpdim = 0.0;
};

/// All connected candidates with FPdim(A)^2 <= FPdim(B) + tol, in ascending
/// lexicographic order of the multiplicity vector (the trivial algebra first).
std::vector<AlgebraCandidate> enumerate_candidates(const FusionRing& ring,
                                                   double tol = 1e-9);

/// A must be isomorphic to its dual object-wise: n_{j*} = n_j.
bool filter_self_dual(const FusionRing& ring, const std::vector<int>& n);

/// Every constituent must pair to a trivial phase with its dual:
/// h_j + h_{j*} = 0 mod 1 exactly.
bool filter_pairing_phase(const ModularData& md, const std::vector<int>& n);

struct BosonVerdict {
  bool applicable = false;  ///< all nontrivial constituents invertible, mult 1
  bool passes = false;      ///< constituents are bosons and close under fusion
};

/**
 * Group-algebra criterion. Applicable when every nontrivial constituent is
 * invertible with multiplicity one; then A is etale iff each constituent has
 * (d, h) = (1, 0) or (-1, 1/2), the support is closed under fusion, and
 * conformal dimensions are additive on it.
 */
BosonVerdict filter_invertible_boson(const ModularData& md,
                                     const std::vector<int>& n,
                                     double tol = 1e-9);

struct QuotientData {
  double fpdim_BA = 0.0;   ///< FPdim(B) / FPdim(A), total dimension of B_A
  double fpdim_BA0 = 0.0;  ///< FPdim(B) / FPdim(A)^2, dyslectic part B_A^0
  bool feasible = true;
  bool lagrangian = false;
};

/// FPdim(B_A^0) must be either 1 (Lagrangian) or >= 2: no fusion category
/// has total dimension strictly between 1 and 2, and below 1 is impossible.
QuotientData quotient_feasibility(const FusionRing& ring,
                                  const std::vector<int>& n, double tol = 1e-6);

/// Literature record for an algebra that the computational chain alone
/// cannot promote to a definite verdict.
struct ConfirmationEntry {
  std::vector<int> n;
  std::string ba_name;
  std::string source;
};

using NimrepCache = std::map<int, std::vector<NimRep>>;

struct ClassifyOptions {
  double tol = 1e-9;
  int nimrep_cap = 8;  ///< largest module-category rank tried
  std::vector<ConfirmationEntry> confirmations;
  NimrepCache* cache = nullptr;  ///< shared across variants of one ring
};

struct AlgebraResult {
  std::vector<int> n;
  AlgebraVerdict verdict = AlgebraVerdict::ruled_out;
  RuledOutReason reason = RuledOutReason::none;
  QuotientData quotient;
  bool boson_verified = false;
  int rank_BA = 0;  ///< module count of the identified NIM-rep, 0 if none
  std::string ba_name;
  std::string confirmed_by;
  std::optional<NimRep> rep;
  std::optional<ModuleIdentification> modules;
};

struct EtaleClassification {
  std::vector<AlgebraResult> algebras;
  bool partial = false;  ///< some candidate needs confirmation with no source
};

/**
 * Full chain over all candidates: self-duality, pairing phase, the
 * group-algebra criterion where applicable, quotient feasibility, nonzero
 * algebra dimension, NIM-rep module identification, and separability of the
 * module quantum dimensions. Requires modular data (throws InvalidInput on a
 * degenerate or inconsistent assignment).
 */
EtaleClassification classify(const ModularData& md,
                             const ClassifyOptions& opts = {});

}  // namespace mfc
