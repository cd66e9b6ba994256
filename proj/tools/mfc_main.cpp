/**
 * @file mfc_main.cpp
 * @brief Command-line interface: fusion-ring checks, modular-data enumeration,
 *        connected-etale-algebra classification, NIM-rep search, the builtin
 *        catalog, aggregate reports, and infrared predictions for massless
 *        flows.
 */
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mfc/catalog.hpp"
#include "mfc/errors.hpp"
#include "mfc/etale.hpp"
#include "mfc/fusion_ring.hpp"
#include "mfc/json_io.hpp"
#include "mfc/modular_data.hpp"
#include "mfc/nimrep.hpp"
#include "mfc/rational.hpp"
#include "mfc/report.hpp"

namespace {

using namespace mfc;

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

/** Finds the builtin entry whose id equals arg, if any. */
const CatalogEntry* entry_by_id(const std::string& arg) {
  for (const CatalogEntry& e : builtin_catalog())
    if (e.id == arg) return &e;
  return nullptr;
}

/** Accepts either a builtin catalog id or a path to a ring JSON file. */
FusionRing resolve_ring(const std::string& arg) {
  if (const CatalogEntry* e = entry_by_id(arg)) return e->ring;
  return load_ring(arg);
}

const char* verdict_kind_name(ModularVerdict::Kind kind) {
  switch (kind) {
    case ModularVerdict::Kind::modular: return "modular";
    case ModularVerdict::Kind::degenerate: return "degenerate";
    case ModularVerdict::Kind::inconsistent: return "inconsistent";
  }
  return "?";
}

void cmd_ring_validate(const std::string& file) {
  const FusionRing ring = load_ring(file);
  const std::vector<ValidationIssue> issues = validate_ring(ring);
  if (issues.empty()) {
    std::cout << "valid fusion ring: rank " << ring.rank << ", labels";
    for (const std::string& l : ring.labels) std::cout << " " << l;
    std::cout << "\n";
    return;
  }
  for (const ValidationIssue& issue : issues)
    std::cout << "axiom '" << issue.axiom << "': " << issue.detail << "\n";
  throw InvalidInput("fusion ring fails validation (" +
                     std::to_string(issues.size()) + " issue(s))");
}

void cmd_ring_fpdim(const std::string& arg) {
  const FusionRing ring = resolve_ring(arg);
  require_valid(ring);
  const FPData fp = fpdim(ring);
  for (int i = 0; i < ring.rank; ++i)
    std::cout << "FPdim(" << ring.labels[i]
              << ") = " << std::setprecision(15) << fp.fpdim_simple[i] << "\n";
  std::cout << "FPdim(B) = " << std::setprecision(15) << fp.fpdim_total << "\n";
}

void cmd_modular_enumerate(const std::string& arg, int max_den, double tol) {
  const FusionRing ring = resolve_ring(arg);
  const Enumeration en = enumerate_modular_data(ring, max_den, tol);
  std::cout << "raw battery-passing (d, h) solutions per sign: " << en.raw_count
            << "\n";
  std::cout << "orbits per sign: " << en.orbit_count << "\n";
  std::cout << "variants (both signs): " << en.variants.size() << "\n";
  for (std::size_t k = 0; k < en.variants.size(); ++k) {
    const ModularData& v = en.variants[k];
    std::cout << "  [" << k << "] d=" << fmt_d(v.d) << " h=" << fmt_h(v.h)
              << " D_sign=" << (v.D_sign > 0 ? "+1" : "-1")
              << " c=" << central_charge(v, max_den, tol).c_mod_8.str()
              << " (mod 8)\n";
  }

  // Cross-check against the builtin catalog when the ring is recognized.
  std::vector<const CatalogEntry*> matches;
  for (const CatalogEntry& e : builtin_catalog())
    if (e.ring.N == ring.N) matches.push_back(&e);
  if (matches.empty()) return;

  bool insufficient = false;
  std::size_t catalog_total = 0;
  for (const CatalogEntry* e : matches) {
    insufficient = insufficient || e->battery_insufficient;
    catalog_total += e->variants.size();
  }
  if (insufficient) {
    std::cout << "note: for this ring the consistency battery admits more "
                 "(d, h) than are categorically realizable; the catalog keeps "
                 "the "
              << catalog_total << " known variants.\n";
    return;
  }

  const std::vector<std::vector<int>> autos = automorphisms(ring);
  std::set<std::string> catalog_keys;
  for (const CatalogEntry* e : matches)
    for (const CatalogVariant& v : e->variants)
      if (v.D_sign > 0) catalog_keys.insert(orbit_key(ring, autos, v.d, v.h));
  std::set<std::string> enum_keys;
  for (const ModularData& v : en.variants)
    if (v.D_sign > 0) enum_keys.insert(orbit_key(ring, autos, v.d, v.h));

  if (catalog_keys == enum_keys) {
    std::cout << "catalog cross-check: enumeration matches the builtin "
                 "catalog ("
              << enum_keys.size() << " orbit(s) per sign)\n";
    return;
  }
  std::size_t missing = 0, extra = 0;
  for (const std::string& k : catalog_keys)
    if (!enum_keys.count(k)) ++missing;
  for (const std::string& k : enum_keys)
    if (!catalog_keys.count(k)) ++extra;
  if (extra)
    std::cout << "catalog cross-check WARNING: enumeration found " << extra
              << " orbit(s) the catalog lacks\n";
  if (missing)
    std::cout << "catalog cross-check WARNING: " << missing
              << " catalog orbit(s) not reached (is --max-den too small?)\n";
}

void cmd_modular_check(const std::string& file, int max_den, double tol) {
  const ModularData md = load_modular(file);
  const ModularVerdict verdict = is_modular(md, tol);
  std::cout << "battery: " << verdict_kind_name(verdict.kind);
  if (!verdict.ok()) std::cout << " (" << verdict.diagnostic << ")";
  std::cout << "\n";
  std::cout << "unitary: " << (is_unitary(md, tol) ? "yes" : "no")
            << ", pseudo-unitary: " << (is_pseudo_unitary(md, tol) ? "yes" : "no")
            << ", D_sign: " << (md.D_sign > 0 ? "+1" : "-1") << "\n";
  if (verdict.ok())
    std::cout << "central charge mod 8: "
              << central_charge(md, max_den, tol).c_mod_8.str() << "\n";
}

void cmd_classify(const std::string& arg, int variant, const std::string& fmt,
                  double tol) {
  if (const CatalogEntry* entry = entry_by_id(arg)) {
    std::vector<ClassificationRecord> records;
    if (variant >= 0) {
      records.push_back(classify_variant(*entry, variant));
    } else {
      records = classify_entry(*entry);
    }
    std::cout << render(records, fmt);
    return;
  }
  if (variant >= 0)
    throw InvalidInput("--variant applies only to catalog entries");
  const ModularData md = load_modular(arg);
  ClassifyOptions opts;
  opts.tol = tol;
  for (const CatalogEntry& e : builtin_catalog())
    if (e.ring.N == md.ring.N) {
      opts.confirmations = catalog_confirmations(e);
      break;
    }
  std::cout << render_single(md, classify(md, opts), fmt);
}

void cmd_nimrep(const std::string& arg, int dim, bool all) {
  const FusionRing ring = resolve_ring(arg);
  require_valid(ring);
  const std::vector<NimRep> reps = search_nimreps(ring, dim);
  std::cout << "found " << reps.size() << " NIM-rep(s) of dimension " << dim
            << " for this rank-" << ring.rank << " ring\n";
  if (!all) return;
  for (const NimRep& rep : reps) {
    std::cout << "[";
    for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "[";
      for (std::size_t r = 0; r < rep.matrices[i].size(); ++r) {
        if (r) std::cout << ",";
        std::cout << "[";
        for (std::size_t c = 0; c < rep.matrices[i][r].size(); ++c) {
          if (c) std::cout << ",";
          std::cout << rep.matrices[i][r][c];
        }
        std::cout << "]";
      }
      std::cout << "]";
    }
    std::cout << "]\n";
  }
}

void cmd_catalog_list() {
  const std::vector<CatalogRow> rows = list_entries();
  std::size_t id_w = 2, name_w = 4;
  for (const CatalogRow& r : rows) {
    id_w = std::max(id_w, r.ids.size());
    name_w = std::max(name_w, r.display_name.size());
  }
  std::cout << std::left << std::setw(static_cast<int>(id_w) + 2) << "id"
            << std::setw(static_cast<int>(name_w) + 2) << "ring"
            << std::setw(6) << "rank" << std::setw(6) << "MFCs"
            << "completely anisotropic?\n";
  for (const CatalogRow& r : rows)
    std::cout << std::left << std::setw(static_cast<int>(id_w) + 2) << r.ids
              << std::setw(static_cast<int>(name_w) + 2) << r.display_name
              << std::setw(6) << r.rank << std::setw(6) << r.mfc_count
              << r.anisotropy << "\n";
}

void cmd_catalog_show(const std::string& id, int variant, bool export_json,
                      int max_den, double tol) {
  const CatalogEntry& entry = load_builtin(id);
  if (variant < 0) {
    if (export_json)
      throw InvalidInput("--export needs --variant to pick one modular datum");
    std::cout << entry.display_name << " (" << entry.id << "), rank "
              << entry.ring.rank << ", " << entry.variants.size() << " MFCs\n";
    std::cout << "labels:";
    for (const std::string& l : entry.ring.labels) std::cout << " " << l;
    std::cout << "\nfusion products:\n";
    for (int i = 1; i < entry.ring.rank; ++i)
      for (int j = i; j < entry.ring.rank; ++j) {
        std::cout << "  " << entry.ring.labels[i] << " x "
                  << entry.ring.labels[j] << " =";
        bool first = true;
        for (int k = 0; k < entry.ring.rank; ++k)
          for (int m = 0; m < entry.ring.n(i, j, k); ++m) {
            std::cout << (first ? " " : " + ") << entry.ring.labels[k];
            first = false;
          }
        if (first) std::cout << " 0";
        std::cout << "\n";
      }
    std::cout << "variants:\n";
    for (std::size_t k = 0; k < entry.variants.size(); ++k) {
      const CatalogVariant& v = entry.variants[k];
      const ModularData md = build_modular(entry.ring, v.d, v.h, v.D_sign, tol);
      std::cout << "  [" << k << "] d=" << fmt_d(v.d) << " h=" << fmt_h(v.h)
                << " D_sign=" << (v.D_sign > 0 ? "+1" : "-1")
                << (v.unitary ? " unitary" : "")
                << " c=" << central_charge(md, max_den, tol).c_mod_8.str()
                << " (mod 8)\n";
    }
    if (!entry.algebras.empty()) {
      std::cout << "expected nontrivial connected etale algebras:\n";
      for (const ExpectedAlgebra& alg : entry.algebras) {
        std::cout << "  n=(";
        for (std::size_t i = 0; i < alg.n.size(); ++i)
          std::cout << (i ? "," : "") << alg.n[i];
        std::cout << ") -> " << alg.ba_name << " (rank " << alg.rank_ba
                  << ", Lagrangian " << (alg.lagrangian ? "yes" : "no");
        if (!alg.confirmed_by.empty())
          std::cout << ", confirmed by " << alg.confirmed_by;
        std::cout << ") on variants";
        for (int k : alg.variant_indices) std::cout << " " << k;
        std::cout << "\n";
      }
    }
    std::cout << "completely anisotropic: " << entry.anisotropy << "\n";
    if (entry.battery_insufficient)
      std::cout << "note: the consistency battery alone does not pin down "
                   "this ring's realizable conformal dimensions; the variant "
                   "list is the known realizable set.\n";
    if (!entry.notes.empty()) std::cout << "sources: " << entry.notes << "\n";
    return;
  }

  if (variant >= static_cast<int>(entry.variants.size()))
    throw InvalidInput("variant index " + std::to_string(variant) +
                       " out of range (" + std::to_string(entry.variants.size()) +
                       " variants)");
  const CatalogVariant& v = entry.variants[variant];
  const ModularData md = build_modular(entry.ring, v.d, v.h, v.D_sign, tol);
  if (export_json) {
    std::cout << modular_to_json(md);
    return;
  }
  std::cout << entry.id << "#" << variant << ": d=" << fmt_d(v.d)
            << " h=" << fmt_h(v.h) << " D_sign=" << (v.D_sign > 0 ? "+1" : "-1")
            << (v.unitary ? " unitary" : "")
            << " c=" << central_charge(md, max_den, tol).c_mod_8.str()
            << " (mod 8)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"connected etale algebras in modular fusion categories"};
  app.require_subcommand(1);

  double tol = 1e-9;
  int max_den = 48;
  app.add_option("--tolerance", tol, "numeric tolerance")
      ->capture_default_str();
  app.add_option("--max-den", max_den,
                 "largest conformal-dimension denominator searched")
      ->capture_default_str();

  // ring validate / fpdim
  CLI::App* ring = app.add_subcommand("ring", "fusion-ring utilities");
  ring->require_subcommand(1);
  std::string ring_file;
  CLI::App* ring_validate =
      ring->add_subcommand("validate", "check the fusion-ring axioms");
  ring_validate->add_option("file", ring_file, "ring JSON file")->required();
  ring_validate->callback([&]() { cmd_ring_validate(ring_file); });
  std::string fpdim_arg;
  CLI::App* ring_fpdim =
      ring->add_subcommand("fpdim", "Frobenius-Perron dimensions");
  ring_fpdim->add_option("ring", fpdim_arg, "ring JSON file or catalog id")
      ->required();
  ring_fpdim->callback([&]() { cmd_ring_fpdim(fpdim_arg); });

  // modular enumerate / check
  CLI::App* modular = app.add_subcommand("modular", "modular-data utilities");
  modular->require_subcommand(1);
  std::string enum_arg;
  CLI::App* modular_enumerate = modular->add_subcommand(
      "enumerate", "enumerate realizable modular data over a fusion ring");
  modular_enumerate->add_option("ring", enum_arg, "ring JSON file or catalog id")
      ->required();
  modular_enumerate->callback(
      [&]() { cmd_modular_enumerate(enum_arg, max_den, tol); });
  std::string check_file;
  CLI::App* modular_check = modular->add_subcommand(
      "check", "run the consistency battery on one modular datum");
  modular_check->add_option("file", check_file, "modular-data JSON file")
      ->required();
  modular_check->callback([&]() { cmd_modular_check(check_file, max_den, tol); });

  // classify
  std::string classify_arg;
  int classify_variant_idx = -1;
  std::string classify_fmt = "md";
  bool flag_json = false, flag_md = false;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify connected etale algebras in one modular datum");
  classify_cmd
      ->add_option("input", classify_arg,
                   "modular-data JSON file or catalog id")
      ->required();
  classify_cmd->add_option("--variant", classify_variant_idx,
                           "single catalog variant index");
  classify_cmd->add_option("--format", classify_fmt, "md or json")
      ->capture_default_str();
  classify_cmd->add_flag("--json", flag_json, "shorthand for --format json");
  classify_cmd->add_flag("--md", flag_md, "shorthand for --format md");
  classify_cmd->callback([&]() {
    if (flag_json && flag_md)
      throw InvalidInput("--json and --md are mutually exclusive");
    if (flag_json) classify_fmt = "json";
    if (flag_md) classify_fmt = "md";
    cmd_classify(classify_arg, classify_variant_idx, classify_fmt, tol);
  });

  // nimrep
  std::string nimrep_arg;
  int nimrep_dim = 0;
  bool nimrep_all = false;
  CLI::App* nimrep_cmd =
      app.add_subcommand("nimrep", "search NIM-reps of a fusion ring");
  nimrep_cmd->add_option("ring", nimrep_arg, "ring JSON file or catalog id")
      ->required();
  nimrep_cmd->add_option("--dim", nimrep_dim, "module rank to search")
      ->required();
  nimrep_cmd->add_flag("--all", nimrep_all, "print every representation");
  nimrep_cmd->callback([&]() { cmd_nimrep(nimrep_arg, nimrep_dim, nimrep_all); });

  // catalog list / show
  CLI::App* catalog = app.add_subcommand("catalog", "builtin catalog");
  catalog->require_subcommand(1);
  CLI::App* catalog_list =
      catalog->add_subcommand("list", "summary of the builtin entries");
  catalog_list->callback([&]() { cmd_catalog_list(); });
  std::string show_id;
  int show_variant = -1;
  bool show_export = false;
  CLI::App* catalog_show =
      catalog->add_subcommand("show", "details of one catalog entry");
  catalog_show->add_option("id", show_id, "catalog id")->required();
  catalog_show->add_option("--variant", show_variant, "variant index");
  catalog_show->add_flag("--export", show_export,
                         "print the variant as modular-data JSON");
  catalog_show->callback([&]() {
    cmd_catalog_show(show_id, show_variant, show_export, max_den, tol);
  });

  // report
  bool report_all = false;
  std::string report_fmt = "md";
  CLI::App* report_cmd =
      app.add_subcommand("report", "classify the whole builtin catalog");
  report_cmd->add_flag("--all", report_all, "include every entry (default)");
  report_cmd->add_option("--format", report_fmt, "md or json")
      ->capture_default_str();
  report_cmd->callback([&]() { std::cout << render(classify_all(), report_fmt); });

  // physics
  std::string physics_model;
  CLI::App* physics_cmd = app.add_subcommand(
      "physics", "infrared prediction for a builtin massless flow");
  physics_cmd->add_option("model", physics_model, "flow key, e.g. M5_9_phi12")
      ->required();
  physics_cmd->callback([&]() { std::cout << physics_report(physics_model); });

  // Let the global --tolerance / --max-den options appear after the
  // subcommand as well: unmatched options fall through to the parent.
  std::vector<CLI::App*> pending = {&app};
  while (!pending.empty()) {
    CLI::App* current = pending.back();
    pending.pop_back();
    for (CLI::App* sub : current->get_subcommands(nullptr)) {
      sub->fallthrough();
      pending.push_back(sub);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
