#include "mfc/etale.hpp"

#include <algorithm>
#include <cmath>

#include "mfc/errors.hpp"

namespace mfc {
namespace {

constexpr double kSepTol = 1e-6;

bool invertible(const FusionRing& ring, int j) {
  const int jd = ring.dual[j];
  if (jd < 0) return false;
  int channels = 0;
  for (int k = 0; k < ring.rank; ++k) channels += ring.N[j][jd][k];
  return channels == 1 && ring.N[j][jd][0] == 1;
}

void collect(const FusionRing& ring, const std::vector<double>& fp,
             double total, double tol, std::vector<int>& n, int j,
             double fp_partial, std::vector<AlgebraCandidate>& out) {
  if (fp_partial * fp_partial > total + tol) return;
  if (j == ring.rank) {
    out.push_back(AlgebraCandidate{n, fp_partial});
    return;
  }
  const int cap = static_cast<int>(
      std::floor((std::sqrt(total) - 1.0) / fp[j] + tol));
  for (int v = 0; v <= cap; ++v) {
    n[j] = v;
    collect(ring, fp, total, tol, n, j + 1, fp_partial + v * fp[j], out);
  }
  n[j] = 0;
}

}  // namespace

std::string verdict_name(AlgebraVerdict v) {
  switch (v) {
    case AlgebraVerdict::trivial: return "trivial";
    case AlgebraVerdict::etale: return "etale";
    case AlgebraVerdict::needs_confirmation: return "needs_confirmation";
    case AlgebraVerdict::ruled_out: return "ruled_out";
  }
  return "?";
}

std::string reason_name(RuledOutReason r) {
  switch (r) {
    case RuledOutReason::none: return "none";
    case RuledOutReason::not_self_dual: return "not_self_dual";
    case RuledOutReason::pairing_phase: return "pairing_phase";
    case RuledOutReason::boson_criterion: return "boson_criterion";
    case RuledOutReason::separability: return "separability";
    case RuledOutReason::quotient_infeasible: return "quotient_infeasible";
  }
  return "?";
}

std::vector<AlgebraCandidate> enumerate_candidates(const FusionRing& ring,
                                                   double tol) {
  require_valid(ring);
  const FPData fp = fpdim(ring);
  std::vector<int> n(ring.rank, 0);
  n[0] = 1;
  std::vector<AlgebraCandidate> out;
  collect(ring, fp.fpdim_simple, fp.fpdim_total, tol, n, 1, 1.0, out);
  return out;
}

bool filter_self_dual(const FusionRing& ring, const std::vector<int>& n) {
  for (int j = 1; j < ring.rank; ++j) {
    if (n[j] == 0) continue;
    const int jd = ring.dual[j];
    if (jd < 0 || n[jd] != n[j]) return false;
  }
  return true;
}

bool filter_pairing_phase(const ModularData& md, const std::vector<int>& n) {
  for (int j = 1; j < md.ring.rank; ++j) {
    if (n[j] == 0) continue;
    const int jd = md.ring.dual[j];
    if ((md.h[j] + md.h[jd]).mod1() != Rational(0)) return false;
  }
  return true;
}

BosonVerdict filter_invertible_boson(const ModularData& md,
                                     const std::vector<int>& n, double tol) {
  const FusionRing& ring = md.ring;
  BosonVerdict verdict;
  for (int j = 1; j < ring.rank; ++j) {
    if (n[j] == 0) continue;
    if (n[j] != 1 || !invertible(ring, j)) return verdict;  // not applicable
  }
  verdict.applicable = true;

  std::vector<int> support;
  for (int j = 0; j < ring.rank; ++j)
    if (j == 0 || n[j] > 0) support.push_back(j);

  const Rational half(1, 2);
  for (int j : support) {
    const bool plain_boson = std::abs(md.d[j] - 1.0) <= tol &&
                             md.h[j].mod1() == Rational(0);
    const bool twisted_boson = std::abs(md.d[j] + 1.0) <= tol &&
                               md.h[j].mod1() == half;
    if (!plain_boson && !twisted_boson) return verdict;
  }
  // Closure under fusion with additive conformal dimensions.
  for (int j : support)
    for (int k : support) {
      int prod = -1;
      for (int l = 0; l < ring.rank; ++l)
        if (ring.N[j][k][l] > 0) prod = l;  // invertibles: single channel
      if (std::find(support.begin(), support.end(), prod) == support.end())
        return verdict;
      if (md.h[prod].mod1() != (md.h[j] + md.h[k]).mod1()) return verdict;
    }
  verdict.passes = true;
  return verdict;
}

QuotientData quotient_feasibility(const FusionRing& ring,
                                  const std::vector<int>& n, double tol) {
  const FPData fp = fpdim(ring);
  double fpA = 0.0;
  for (int j = 0; j < ring.rank; ++j) fpA += n[j] * fp.fpdim_simple[j];
  QuotientData q;
  q.fpdim_BA = fp.fpdim_total / fpA;
  q.fpdim_BA0 = fp.fpdim_total / (fpA * fpA);
  q.lagrangian = std::abs(q.fpdim_BA0 - 1.0) <= tol;
  const bool below_one = q.fpdim_BA0 < 1.0 - tol;
  const bool in_gap = q.fpdim_BA0 > 1.0 + tol && q.fpdim_BA0 < 2.0 - tol;
  q.feasible = !below_one && !in_gap;
  return q;
}

EtaleClassification classify(const ModularData& md,
                             const ClassifyOptions& opts) {
  const ModularVerdict mv = is_modular(md, opts.tol);
  if (!mv.ok())
    throw InvalidInput("algebra classification needs modular data: " +
                       mv.diagnostic);
  const FusionRing& ring = md.ring;

  NimrepCache local_cache;
  NimrepCache& cache = opts.cache ? *opts.cache : local_cache;
  auto reps_of_dim = [&](int dim) -> const std::vector<NimRep>& {
    auto it = cache.find(dim);
    if (it == cache.end())
      it = cache.emplace(dim, search_nimreps(ring, dim)).first;
    return it->second;
  };

  EtaleClassification result;
  for (const AlgebraCandidate& cand : enumerate_candidates(ring, opts.tol)) {
    AlgebraResult res;
    res.n = cand.n;
    res.quotient = quotient_feasibility(ring, cand.n);

    const bool trivial =
        std::all_of(cand.n.begin() + 1, cand.n.end(), [](int v) { return v == 0; });
    if (trivial) {
      res.verdict = AlgebraVerdict::trivial;
      res.quotient = quotient_feasibility(ring, cand.n, kSepTol);
      res.rank_BA = ring.rank;
      res.ba_name = "B";
      result.algebras.push_back(std::move(res));
      continue;
    }

    if (!filter_self_dual(ring, cand.n)) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::not_self_dual;
      result.algebras.push_back(std::move(res));
      continue;
    }
    if (!filter_pairing_phase(md, cand.n)) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::pairing_phase;
      result.algebras.push_back(std::move(res));
      continue;
    }
    const BosonVerdict boson = filter_invertible_boson(md, cand.n, opts.tol);
    if (boson.applicable && !boson.passes) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::boson_criterion;
      result.algebras.push_back(std::move(res));
      continue;
    }
    if (!res.quotient.feasible) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::quotient_infeasible;
      result.algebras.push_back(std::move(res));
      continue;
    }
    double dA = 0.0;
    for (int j = 0; j < ring.rank; ++j) dA += cand.n[j] * md.d[j];
    if (std::abs(dA) <= kSepTol) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::separability;
      result.algebras.push_back(std::move(res));
      continue;
    }
    res.boson_verified = boson.applicable && boson.passes;

    for (int dim = 1; dim <= opts.nimrep_cap && !res.modules; ++dim) {
      for (const NimRep& rep : reps_of_dim(dim)) {
        auto ident = identify_modules(md, cand.n, rep);
        if (ident) {
          res.rep = rep;
          res.modules = std::move(ident);
          res.rank_BA = dim;
          break;
        }
      }
    }

    bool separable = true;
    if (res.modules) {
      const FPData fp = fpdim(ring);
      double fpA = 0.0;
      for (int j = 0; j < ring.rank; ++j) fpA += cand.n[j] * fp.fpdim_simple[j];
      for (std::size_t a = 0; a < res.modules->module_qdims.size(); ++a) {
        const double q = res.modules->module_qdims[a];
        if (std::abs(q) <= kSepTol) {
          separable = false;
          break;
        }
        double fpm = 0.0;
        for (int i = 0; i < ring.rank; ++i)
          fpm += res.modules->images[a][i] * fp.fpdim_simple[i];
        const bool invertible_type = std::abs(fpm / fpA - 1.0) <= kSepTol;
        if (invertible_type && std::abs(std::abs(q) - 1.0) > kSepTol) {
          separable = false;
          break;
        }
      }
    }
    if (!separable) {
      res.verdict = AlgebraVerdict::ruled_out;
      res.reason = RuledOutReason::separability;
      result.algebras.push_back(std::move(res));
      continue;
    }

    res.verdict = res.boson_verified ? AlgebraVerdict::etale
                                     : AlgebraVerdict::needs_confirmation;
    for (const ConfirmationEntry& conf : opts.confirmations)
      if (conf.n == cand.n) {  // name only survivors; ruled-out stays bare
        res.ba_name = conf.ba_name;
        res.confirmed_by = conf.source;
        break;
      }
    if (res.verdict == AlgebraVerdict::needs_confirmation &&
        res.confirmed_by.empty())
      result.partial = true;
    result.algebras.push_back(std::move(res));
  }
  return result;
}

}  // namespace mfc
