#include "mfc/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mfc/errors.hpp"

namespace mfc {
namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  const long long nearest = std::llround(x);
  if (std::abs(x - static_cast<double>(nearest)) < 1e-9)
    return std::to_string(nearest);
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

std::string fmt_d(const std::vector<double>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += fmt_double(d[i]);
  }
  return out + ")";
}

std::string fmt_h(const std::vector<Rational>& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ", ";
    out += h[i].str();
  }
  return out + ")";
}

std::string fmt_gsd(const std::vector<int>& gsd) {
  std::string out = "{";
  for (std::size_t i = 0; i < gsd.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(gsd[i]);
  }
  return out + "}";
}

std::string algebra_name(const std::vector<std::string>& labels,
                         const std::vector<int>& n) {
  std::string out = "1";
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (n[i] == 0) continue;
    out += "⊕";
    if (n[i] > 1) out += std::to_string(n[i]);
    out += labels[i];
  }
  return out;
}

json rational_json(const Rational& r) { return json::array({r.num(), r.den()}); }

json record_json(const ClassificationRecord& rec) {
  json j;
  j["mfc_id"] = rec.mfc_id;
  j["entry"] = rec.entry_id;
  j["variant"] = rec.variant_index;
  j["d"] = rec.d;
  json h = json::array();
  for (const Rational& r : rec.h) h.push_back(rational_json(r));
  j["h"] = h;
  j["D_sign"] = rec.D_sign;
  j["unitary"] = rec.unitary;
  j["central_charge_mod_8"] = rec.central_charge_mod_8
                                  ? rational_json(*rec.central_charge_mod_8)
                                  : json();
  j["anisotropic"] = rec.anisotropic;
  j["gsd"] = rec.gsd_set;
  j["ssb"] = rec.ssb;
  j["partial"] = rec.partial;
  if (!rec.error.empty()) j["error"] = rec.error;
  json algs = json::array();
  for (const AlgebraResult& alg : rec.etale.algebras) {
    json ja;
    ja["n"] = alg.n;
    ja["algebra"] = algebra_name(rec.labels, alg.n);
    ja["verdict"] = verdict_name(alg.verdict);
    if (alg.verdict == AlgebraVerdict::ruled_out)
      ja["reason"] = reason_name(alg.reason);
    if (alg.verdict != AlgebraVerdict::ruled_out) {
      ja["rank_ba"] = alg.rank_BA;
      ja["lagrangian"] = alg.quotient.lagrangian;
      ja["fpdim_BA"] = alg.quotient.fpdim_BA;
      ja["fpdim_BA0"] = alg.quotient.fpdim_BA0;
      if (!alg.ba_name.empty()) ja["ba_name"] = alg.ba_name;
      if (!alg.confirmed_by.empty()) ja["confirmed_by"] = alg.confirmed_by;
    }
    algs.push_back(std::move(ja));
  }
  j["algebras"] = std::move(algs);
  return j;
}

/** Aggregated per-entry survivor row for the markdown table. */
struct SurvivorRow {
  std::vector<int> n;
  std::string ba_name;
  int rank_ba = 0;
  bool lagrangian = false;
  std::string confirmed_by;
  std::vector<const ClassificationRecord*> where;
};

void render_entry_md(std::ostringstream& out, const CatalogEntry& entry,
                     const std::vector<const ClassificationRecord*>& records) {
  out << "## " << entry.display_name << " (" << entry.id << ", rank "
      << entry.ring.rank << ", " << records.size() << " MFCs)\n\n";

  for (const ClassificationRecord* rec : records)
    if (!rec->error.empty())
      out << "- " << rec->mfc_id << ": ERROR " << rec->error << "\n";

  // Aggregate surviving algebras across variants.
  std::vector<SurvivorRow> rows;
  bool trivial_lagrangian = false;
  int usable = 0;
  for (const ClassificationRecord* rec : records) {
    if (!rec->error.empty()) continue;
    ++usable;
    for (const AlgebraResult& alg : rec->etale.algebras) {
      if (alg.verdict == AlgebraVerdict::ruled_out) continue;
      if (alg.verdict == AlgebraVerdict::trivial) {
        trivial_lagrangian = alg.quotient.lagrangian;
        continue;
      }
      SurvivorRow* row = nullptr;
      for (SurvivorRow& r : rows)
        if (r.n == alg.n) row = &r;
      if (row == nullptr) {
        rows.push_back(SurvivorRow{alg.n, alg.ba_name, alg.rank_BA,
                                   alg.quotient.lagrangian, alg.confirmed_by,
                                   {}});
        row = &rows.back();
      }
      row->where.push_back(rec);
    }
  }

  out << "| Connected etale algebra A | B_A | rank(B_A) | Lagrangian? | Where "
         "|\n";
  out << "|---|---|---|---|---|\n";
  out << "| 1 | B | " << entry.ring.rank << " | "
      << (trivial_lagrangian ? "Yes" : "No") << " | all variants |\n";
  for (const SurvivorRow& row : rows) {
    std::string where;
    if (static_cast<int>(row.where.size()) == usable) {
      where = "all variants";
    } else {
      std::vector<std::string> seen;
      for (const ClassificationRecord* rec : row.where) {
        const std::string key = "d=" + fmt_d(rec->d) + ", h=" + fmt_h(rec->h);
        if (std::find(seen.begin(), seen.end(), key) == seen.end())
          seen.push_back(key);
      }
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i) where += "; ";
        where += seen[i];
      }
    }
    if (!row.confirmed_by.empty()) where += "; confirmed by " + row.confirmed_by;
    out << "| " << algebra_name(entry.ring.labels, row.n) << " | "
        << (row.ba_name.empty() ? "?" : row.ba_name) << " | " << row.rank_ba
        << " | " << (row.lagrangian ? "Yes" : "No") << " | " << where << " |\n";
  }
  out << "\n";

  std::vector<ClassificationRecord> copy;
  for (const ClassificationRecord* rec : records) copy.push_back(*rec);
  const std::vector<GsdCase> cases = gsd_report(copy);
  out << "GSD cases: ";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (i) out << "; ";
    out << fmt_gsd(cases[i].gsd) << " for " << cases[i].scope
        << " (SSB: " << (cases[i].ssb ? "yes" : "no") << ")";
  }
  out << "\n\n";
}

std::string render_md(const std::vector<ClassificationRecord>& records) {
  std::ostringstream out;
  out << "# Connected etale algebras in modular fusion categories of rank <= "
         "5\n\n";
  out << hypothesis_header() << "\n\n";
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    std::vector<const ClassificationRecord*> group;
    while (j < records.size() && records[j].entry_id == records[i].entry_id)
      group.push_back(&records[j++]);
    render_entry_md(out, load_builtin(records[i].entry_id), group);
    i = j;
  }
  return out.str();
}

}  // namespace

ClassificationRecord classify_variant(const CatalogEntry& entry,
                                      int variant_index, NimrepCache* cache) {
  if (variant_index < 0 ||
      variant_index >= static_cast<int>(entry.variants.size()))
    throw InvalidInput("variant index " + std::to_string(variant_index) +
                       " out of range for catalog entry '" + entry.id + "' (" +
                       std::to_string(entry.variants.size()) + " variants)");
  const CatalogVariant& v = entry.variants[variant_index];
  ClassificationRecord rec;
  rec.entry_id = entry.id;
  rec.labels = entry.ring.labels;
  rec.variant_index = variant_index;
  rec.mfc_id = entry.id + "#" + std::to_string(variant_index);
  rec.d = v.d;
  rec.h = v.h;
  rec.D_sign = v.D_sign;
  rec.unitary = v.unitary;

  NimrepCache local;
  ClassifyOptions opts;
  opts.confirmations = catalog_confirmations(entry);
  opts.cache = cache != nullptr ? cache : &local;
  try {
    const ModularData md = build_modular(entry.ring, v.d, v.h, v.D_sign);
    rec.central_charge_mod_8 = central_charge(md).c_mod_8;
    rec.etale = classify(md, opts);
  } catch (const Error& err) {
    rec.error = err.what();
    rec.anisotropic = false;
    return rec;
  }

  const GsdSummary summary = summarize_gsd(rec.etale);
  rec.partial = summary.partial;
  rec.anisotropic = summary.anisotropic;
  rec.gsd_set = summary.gsd;
  rec.ssb = summary.ssb;
  return rec;
}

GsdSummary summarize_gsd(const EtaleClassification& cls) {
  GsdSummary out;
  out.partial = cls.partial;
  std::set<int> gsd;
  for (const AlgebraResult& alg : cls.algebras) {
    if (alg.verdict == AlgebraVerdict::ruled_out) continue;
    if (alg.verdict != AlgebraVerdict::trivial) out.anisotropic = false;
    const bool counts =
        alg.verdict == AlgebraVerdict::trivial ||
        alg.verdict == AlgebraVerdict::etale ||
        (alg.verdict == AlgebraVerdict::needs_confirmation &&
         !alg.confirmed_by.empty());
    if (!counts || alg.rank_BA <= 0) {
      out.partial = true;
      continue;
    }
    gsd.insert(alg.rank_BA);
  }
  out.gsd.assign(gsd.begin(), gsd.end());
  out.ssb = !out.gsd.empty() && out.gsd.front() > 1;
  return out;
}

std::vector<ClassificationRecord> classify_entry(const CatalogEntry& entry) {
  NimrepCache cache;
  std::vector<ClassificationRecord> out;
  for (int k = 0; k < static_cast<int>(entry.variants.size()); ++k)
    out.push_back(classify_variant(entry, k, &cache));
  return out;
}

std::vector<ClassificationRecord> classify_all() {
  std::vector<ClassificationRecord> out;
  for (const CatalogEntry& entry : builtin_catalog())
    for (ClassificationRecord& rec : classify_entry(entry))
      out.push_back(std::move(rec));
  return out;
}

std::vector<GsdCase> gsd_report(
    const std::vector<ClassificationRecord>& records) {
  std::vector<GsdCase> cases;
  for (std::size_t i = 0; i < records.size();) {
    std::size_t j = i;
    while (j < records.size() && records[j].entry_id == records[i].entry_id)
      ++j;
    std::map<std::vector<int>, std::vector<int>> groups;
    int usable = 0;
    for (std::size_t k = i; k < j; ++k) {
      if (!records[k].error.empty()) continue;
      ++usable;
      groups[records[k].gsd_set].push_back(records[k].variant_index);
    }
    for (auto& [gsd, idxs] : groups) {
      GsdCase c;
      c.entry_id = records[i].entry_id;
      c.gsd = gsd;
      c.ssb = !gsd.empty() && gsd.front() > 1;
      c.variant_indices = idxs;
      if (static_cast<int>(idxs.size()) == usable)
        c.scope = usable == 1 ? "the single variant"
                              : "all " + std::to_string(usable) + " variants";
      else if (gsd.size() > 1)
        c.scope = std::to_string(idxs.size()) +
                  " variants with a nontrivial etale algebra";
      else
        c.scope = "the other " + std::to_string(idxs.size()) + " variants";
      cases.push_back(std::move(c));
    }
    i = j;
  }
  return cases;
}

std::string render(const std::vector<ClassificationRecord>& records,
                   const std::string& format) {
  if (format == "md" || format == "markdown") return render_md(records);
  if (format == "json") {
    json j;
    j["schema_version"] = 1;
    json arr = json::array();
    for (const ClassificationRecord& rec : records)
      arr.push_back(record_json(rec));
    j["records"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  throw InvalidInput("unknown report format '" + format +
                     "' (expected 'md' or 'json')");
}

std::string render_single(const ModularData& md, const EtaleClassification& cls,
                          const std::string& format) {
  const GsdSummary summary = summarize_gsd(cls);
  const std::optional<Rational> c =
      is_modular(md).ok() ? std::optional<Rational>(central_charge(md).c_mod_8)
                          : std::nullopt;

  if (format == "json") {
    json j;
    j["d"] = md.d;
    json h = json::array();
    for (const Rational& r : md.h) h.push_back(rational_json(r));
    j["h"] = std::move(h);
    j["D_sign"] = md.D_sign;
    j["central_charge_mod_8"] = c ? rational_json(*c) : json();
    j["anisotropic"] = summary.anisotropic;
    j["gsd"] = summary.gsd;
    j["ssb"] = summary.ssb;
    j["partial"] = summary.partial;
    json algs = json::array();
    for (const AlgebraResult& alg : cls.algebras) {
      json ja;
      ja["n"] = alg.n;
      ja["algebra"] = algebra_name(md.ring.labels, alg.n);
      ja["verdict"] = verdict_name(alg.verdict);
      if (alg.verdict == AlgebraVerdict::ruled_out) {
        ja["reason"] = reason_name(alg.reason);
      } else {
        ja["rank_ba"] = alg.rank_BA;
        ja["lagrangian"] = alg.quotient.lagrangian;
        if (!alg.ba_name.empty()) ja["ba_name"] = alg.ba_name;
        if (!alg.confirmed_by.empty()) ja["confirmed_by"] = alg.confirmed_by;
      }
      algs.push_back(std::move(ja));
    }
    j["algebras"] = std::move(algs);
    return j.dump(2) + "\n";
  }
  if (format != "md" && format != "markdown")
    throw InvalidInput("unknown report format '" + format +
                       "' (expected 'md' or 'json')");

  std::ostringstream out;
  if (c) out << "central charge mod 8: " << c->str() << "\n\n";
  out << "| Connected etale algebra A | verdict | B_A | rank(B_A) | "
         "Lagrangian? | notes |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const AlgebraResult& alg : cls.algebras) {
    out << "| " << algebra_name(md.ring.labels, alg.n) << " | ";
    if (alg.verdict == AlgebraVerdict::ruled_out) {
      out << "ruled_out (" << reason_name(alg.reason) << ") |  |  |  |  |\n";
      continue;
    }
    out << verdict_name(alg.verdict) << " | "
        << (alg.ba_name.empty() ? "?" : alg.ba_name) << " | " << alg.rank_BA
        << " | " << (alg.quotient.lagrangian ? "Yes" : "No") << " | "
        << (alg.confirmed_by.empty() ? "" : "confirmed by " + alg.confirmed_by)
        << " |\n";
  }
  out << "\nGSD values " << fmt_gsd(summary.gsd) << "; SSB "
      << (summary.ssb ? "yes" : "no") << "; completely anisotropic "
      << (summary.anisotropic ? "yes" : "no");
  if (summary.partial) out << "; PARTIAL (unconfirmed survivors)";
  out << "\n";
  return out.str();
}

const std::vector<PhysicsLookup>& physics_lookups() {
  static const std::vector<PhysicsLookup> lookups = {
      {"M5_9_phi12",
       "M(5,9) + phi_{1,2}",
       "psu2_7",
       {2, 3},
       {"X ~ L_{7,1}", "Y ~ L_{3,1}", "Z ~ L_{5,1}"}},
      {"M5_11_phi51",
       "M(5,11) + phi_{5,1}",
       "su2_3",
       {4, 5},
       {"X ~ L_{1,4}", "Y ~ L_{1,3}", "Z ~ L_{1,2}"}},
      {"M6_11_phi12",
       "M(6,11) + phi_{1,2}",
       "psu2_9",
       {2, 3},
       {"X ~ L_{9,1}", "Y ~ L_{3,1}", "Z ~ L_{7,1}", "W ~ L_{5,1}"}},
      {"M6_13_phi51",
       "M(6,13) + phi_{5,1}",
       "su2_4",
       {0, 1},
       {"X ~ L_{1,5}", "Y ~ L_{1,2}", "Z ~ L_{1,4}", "W ~ L_{1,3}"}},
  };
  return lookups;
}

std::string physics_report(const std::string& model) {
  const PhysicsLookup* lookup = nullptr;
  for (const PhysicsLookup& p : physics_lookups())
    if (p.model == model) lookup = &p;
  if (lookup == nullptr) {
    std::ostringstream msg;
    msg << "unknown model '" << model << "'; valid models:";
    for (const PhysicsLookup& p : physics_lookups()) msg << " " << p.model;
    throw InvalidInput(msg.str());
  }

  const CatalogEntry& entry = load_builtin(lookup->entry_id);
  std::ostringstream out;
  out << hypothesis_header() << "\n\n";
  out << "Flow: " << lookup->deformation << "\n";
  out << "Infrared MFC: " << entry.display_name << " (";
  for (std::size_t i = 0; i < lookup->variant_indices.size(); ++i) {
    if (i) out << ", ";
    out << entry.id << "#" << lookup->variant_indices[i];
  }
  out << ")\n";
  out << "Identifications:";
  for (const std::string& ident : lookup->identifications) out << " " << ident;
  out << "\n";

  NimrepCache cache;
  for (std::size_t i = 0; i < lookup->variant_indices.size(); ++i) {
    const int k = lookup->variant_indices[i];
    const ClassificationRecord rec = classify_variant(entry, k, &cache);
    if (!rec.error.empty()) {
      out << entry.id << "#" << k << ": ERROR " << rec.error << "\n";
      continue;
    }
    out << entry.id << "#" << k << ": D_sign " << (rec.D_sign > 0 ? "+" : "-")
        << ", c = " << rec.central_charge_mod_8->str() << " (mod 8)"
        << ", GSD values " << fmt_gsd(rec.gsd_set) << ", SSB "
        << (rec.ssb ? "yes" : "no") << "\n";
  }
  return out.str();
}

const char* hypothesis_header() {
  return "Working hypothesis: two-dimensional gapped phases with the symmetry "
         "of a modular fusion category B are classified by the categories B_A "
         "of right modules over connected etale algebras A in B; the "
         "ground-state degeneracy of the B_A phase is rank(B_A), and "
         "spontaneous symmetry breaking is unavoidable when every achievable "
         "rank exceeds one.";
}

}  // namespace mfc
