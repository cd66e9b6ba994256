#pragma once

#include <string>
#include <vector>

#include "mfc/etale.hpp"
#include "mfc/fusion_ring.hpp"
#include "mfc/rational.hpp"

namespace mfc {

/** One realizable modular datum on a catalog ring: quantum dimensions,
 *  conformal dimensions mod 1, and the sign choice for the total dimension. */
struct CatalogVariant {
  std::vector<double> d;
  std::vector<Rational> h;
  int D_sign = +1;
  bool unitary = false;  ///< true iff d equals the Frobenius-Perron dimensions
};

/** A nontrivial connected etale algebra known to exist on some variants,
 *  together with the classification data of its quotient category B_A. */
struct ExpectedAlgebra {
  std::vector<int> n;                ///< multiplicity vector of A
  std::string ba_name;               ///< display name of B_A
  int rank_ba = 0;                   ///< rank of B_A
  bool lagrangian = false;           ///< FPdim(B) == fpdim(A)^2
  std::string confirmed_by;          ///< literature tag; empty if the boson
                                     ///< criterion settles existence internally
  std::vector<int> variant_indices;  ///< variants carrying this algebra
};

/** A builtin fusion ring with every modular datum it admits (denominator
 *  bound 48) and the expected etale-algebra content of each variant. */
struct CatalogEntry {
  std::string id;            ///< machine name, e.g. "su2_4"
  std::string display_name;  ///< human name, e.g. "su(2)_4"
  FusionRing ring;
  std::vector<CatalogVariant> variants;  ///< realizable (d, h, D_sign) triples
  std::vector<ExpectedAlgebra> algebras;
  std::string anisotropy;  ///< summary: which variants keep only the trivial A
  std::string notes;       ///< provenance tags for the variant data
  /** true when the consistency battery alone cannot pin down every h
   *  (extra categorical constraints prune the realizable list further). */
  bool battery_insufficient = false;
};

/** All builtin entries, in fixed display order. */
const std::vector<CatalogEntry>& builtin_catalog();

/** Look up one entry by id; unknown ids raise InvalidInput listing valid ones. */
const CatalogEntry& load_builtin(const std::string& id);

/** One row of the summary listing; entries sharing a ring are merged. */
struct CatalogRow {
  std::string ids;           ///< entry id(s), comma separated when merged
  std::string display_name;  ///< ring name(s)
  int rank = 0;
  int mfc_count = 0;  ///< total variants across the merged entries
  std::string anisotropy;
};

/** Summary table over the builtin catalog (one row per distinct ring). */
std::vector<CatalogRow> list_entries();

/** Confirmation records for classify(), derived from the expected algebras. */
std::vector<ConfirmationEntry> catalog_confirmations(const CatalogEntry& entry);

}  // namespace mfc
