#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfc/catalog.hpp"
#include "mfc/etale.hpp"
#include "mfc/modular_data.hpp"
#include "mfc/rational.hpp"

namespace mfc {

/** Full classification outcome for one catalog variant. */
struct ClassificationRecord {
  std::string mfc_id;    ///< "<entry_id>#<variant_index>"
  std::string entry_id;
  std::vector<std::string> labels;  ///< simple-object labels of the ring
  int variant_index = 0;
  std::vector<double> d;
  std::vector<Rational> h;
  int D_sign = +1;
  bool unitary = false;
  std::optional<Rational> central_charge_mod_8;
  EtaleClassification etale;
  bool anisotropic = true;   ///< only the trivial algebra survives
  std::vector<int> gsd_set;  ///< sorted distinct ranks of the surviving B_A
  bool ssb = false;          ///< every surviving B_A has rank > 1
  bool partial = false;      ///< some surviving algebra lacks confirmation/rank
  std::string error;         ///< set when the variant fails the battery
};

/** Classifies one variant of a catalog entry. */
ClassificationRecord classify_variant(const CatalogEntry& entry,
                                      int variant_index,
                                      NimrepCache* cache = nullptr);

/** Classifies every variant of one entry (NIM-rep searches shared). */
std::vector<ClassificationRecord> classify_entry(const CatalogEntry& entry);

/** Classifies the whole builtin catalog. */
std::vector<ClassificationRecord> classify_all();

/** One ground-state-degeneracy case: a set of variants of one entry sharing
 *  the same set of achievable B_A ranks. */
struct GsdCase {
  std::string entry_id;
  std::string scope;         ///< "all N variants" or a subset description
  std::vector<int> gsd;      ///< sorted distinct ranks
  bool ssb = false;
  std::vector<int> variant_indices;
};

/** Groups records into GSD cases, in catalog order (algebra-rich cases first
 *  within an entry). */
std::vector<GsdCase> gsd_report(const std::vector<ClassificationRecord>& records);

/** Renders records as "md" (per-entry tables) or "json" (schema_version 1).
 *  Unknown formats raise InvalidInput. */
std::string render(const std::vector<ClassificationRecord>& records,
                   const std::string& format);

/** GSD/SSB summary derived from one classification. */
struct GsdSummary {
  std::vector<int> gsd;       ///< sorted distinct ranks of the surviving B_A
  bool ssb = false;           ///< every achievable rank exceeds one
  bool anisotropic = true;    ///< only the trivial algebra survives
  bool partial = false;       ///< a survivor lacks confirmation or a rank
};

GsdSummary summarize_gsd(const EtaleClassification& cls);

/** Renders one classification of standalone modular data ("md" or "json"). */
std::string render_single(const ModularData& md, const EtaleClassification& cls,
                          const std::string& format);

/** A massless renormalization-group flow whose infrared is predicted by one
 *  catalog variant. */
struct PhysicsLookup {
  std::string model;         ///< lookup key, e.g. "M5_9_phi12"
  std::string deformation;   ///< display name, e.g. "M(5,9) + phi_{1,2}"
  std::string entry_id;
  std::vector<int> variant_indices;  ///< both total-dimension signs
  std::vector<std::string> identifications;  ///< object ~ primary field
};

/** The builtin flow lookups. */
const std::vector<PhysicsLookup>& physics_lookups();

/** Renders the infrared prediction for one flow (unknown model raises
 *  InvalidInput listing the valid keys). */
std::string physics_report(const std::string& model);

/** The working hypothesis qualifying every GSD/SSB statement. */
const char* hypothesis_header();

}  // namespace mfc
