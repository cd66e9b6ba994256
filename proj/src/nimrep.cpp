#include "mfc/nimrep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "mfc/errors.hpp"

namespace mfc {
namespace {

IntMatrix identity_matrix(int m) {
  IntMatrix I(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a) I[a][a] = 1;
  return I;
}

IntMatrix transpose(const IntMatrix& a) {
  const int m = static_cast<int>(a.size());
  IntMatrix t(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[y][x] = a[x][y];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const int m = static_cast<int>(a.size());
  IntMatrix p(m, std::vector<int>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int c = 0; c < m; ++c) {
      const int v = a[x][c];
      if (v == 0) continue;
      for (int y = 0; y < m; ++y) p[x][y] += v * b[c][y];
    }
  return p;
}

using State = std::vector<std::optional<IntMatrix>>;

/// Propagates products with a single unit-coefficient unknown and verifies
/// fully determined ones. Returns false on contradiction.
bool derive_closure(const FusionRing& ring, int m,
                    const std::vector<int>& cap, State& st) {
  const int r = ring.rank;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < r; ++a) {
      if (!st[a]) continue;
      for (int b = 0; b < r; ++b) {
        if (!st[b]) continue;
        int unknown = -1, unknown_count = 0;
        for (int k = 0; k < r; ++k)
          if (ring.N[a][b][k] > 0 && !st[k]) {
            unknown = k;
            ++unknown_count;
          }
        if (unknown_count > 1) continue;
        IntMatrix rest(m, std::vector<int>(m, 0));
        for (int k = 0; k < r; ++k) {
          const int mult = ring.N[a][b][k];
          if (mult == 0 || !st[k]) continue;
          const IntMatrix& nk = *st[k];
          for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) rest[x][y] += mult * nk[x][y];
        }
        const IntMatrix prod = multiply(*st[a], *st[b]);
        if (unknown_count == 0) {
          if (prod != rest) return false;
          continue;
        }
        if (ring.N[a][b][unknown] != 1) continue;
        IntMatrix cand(m, std::vector<int>(m, 0));
        bool ok = true;
        for (int x = 0; x < m && ok; ++x)
          for (int y = 0; y < m; ++y) {
            const int v = prod[x][y] - rest[x][y];
            if (v < 0 || v > cap[unknown]) {
              ok = false;
              break;
            }
            cand[x][y] = v;
          }
        if (!ok) return false;
        const int ud = ring.dual[unknown];
        if (ud == unknown && cand != transpose(cand)) return false;
        if (st[ud]) {
          if (*st[ud] != transpose(cand)) return false;
        }
        st[unknown] = cand;
        if (ud != unknown) st[ud] = transpose(cand);
        changed = true;
      }
    }
  }
  return true;
}

class NimSearcher {
 public:
  NimSearcher(const FusionRing& ring, int m)
      : ring_(ring), m_(m), fp_(fpdim(ring)) {
    const int r = ring_.rank;
    cap_.assign(r, 0);
    for (int i = 0; i < r; ++i)
      cap_[i] = static_cast<int>(std::floor(
          fp_.fpdim_total / fp_.fpdim_simple[i] + 1e-9));
    cap_[0] = 1;
    // Sharpen through the diagonal of n_i n_i^T until stable.
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (int i = 1; i < r; ++i) {
        double budget = 0.0;
        for (int k = 0; k < r; ++k)
          budget += ring_.N[i][ring_.dual[i]][k] * cap_[k];
        const int refined =
            static_cast<int>(std::floor(std::sqrt(budget) + 1e-9));
        if (refined < cap_[i]) {
          cap_[i] = refined;
          shrunk = true;
        }
      }
    }
    for (int i = 1; i < r; ++i)
      if (ring_.dual[i] >= i) free_.push_back(i);
  }

  std::vector<NimRep> run() {
    State st(ring_.rank, std::nullopt);
    st[0] = identity_matrix(m_);
    branch(std::move(st));
    std::vector<NimRep> out;
    for (const auto& flat : canon_) {
      NimRep rep;
      rep.dim = m_;
      rep.matrices.assign(ring_.rank, IntMatrix(m_, std::vector<int>(m_, 0)));
      std::size_t t = 0;
      for (int i = 0; i < ring_.rank; ++i)
        for (int x = 0; x < m_; ++x)
          for (int y = 0; y < m_; ++y) rep.matrices[i][x][y] = flat[t++];
      out.push_back(std::move(rep));
    }
    return out;
  }

 private:
  void branch(State st) {
    if (!derive_closure(ring_, m_, cap_, st)) return;
    int next = -1;
    for (int i : free_)
      if (!st[i]) {
        next = i;
        break;
      }
    if (next < 0) {
      finish(st);
      return;
    }
    IntMatrix mat(m_, std::vector<int>(m_, 0));
    fill_row(next, st, mat, 0);
  }

  /// Sum-of-squares budget for a row of n_i from the diagonal of
  /// n_i n_{i*} = sum_k N_{i,i*}^k n_k: exact where n_k is known,
  /// [0, cap_k] elsewhere. The entry (a,a) of the matrix being built counts
  /// as known.
  void row_budget(int i, const State& st, const IntMatrix& mat, int a,
                  long long& lo, long long& hi) const {
    lo = 0;
    hi = 0;
    const int idual = ring_.dual[i];
    for (int k = 0; k < ring_.rank; ++k) {
      const int mult = ring_.N[i][idual][k];
      if (mult == 0) continue;
      if (k == i || k == idual) {
        lo += static_cast<long long>(mult) * mat[a][a];
        hi += static_cast<long long>(mult) * mat[a][a];
      } else if (st[k]) {
        lo += static_cast<long long>(mult) * (*st[k])[a][a];
        hi += static_cast<long long>(mult) * (*st[k])[a][a];
      } else {
        hi += static_cast<long long>(mult) * cap_[k];
      }
    }
  }

  bool cross_row_ok(int i, const State& st, const IntMatrix& mat, int a) const {
    const int idual = ring_.dual[i];
    for (int b = 0; b < a; ++b) {
      long long dot = 0;
      for (int c = 0; c < m_; ++c)
        dot += static_cast<long long>(mat[a][c]) * mat[b][c];
      long long lo = 0, hi = 0;
      for (int k = 0; k < ring_.rank; ++k) {
        const int mult = ring_.N[i][idual][k];
        if (mult == 0) continue;
        if (k == i) {
          lo += static_cast<long long>(mult) * mat[a][b];
          hi += static_cast<long long>(mult) * mat[a][b];
        } else if (k == idual) {
          lo += static_cast<long long>(mult) * mat[b][a];
          hi += static_cast<long long>(mult) * mat[b][a];
        } else if (st[k]) {
          lo += static_cast<long long>(mult) * (*st[k])[a][b];
          hi += static_cast<long long>(mult) * (*st[k])[a][b];
        } else {
          hi += static_cast<long long>(mult) * cap_[k];
        }
      }
      if (dot < lo || dot > hi) return false;
    }
    return true;
  }

  void fill_row(int i, const State& st, IntMatrix& mat, int a) {
    if (a == m_) {
      State st2 = st;
      st2[i] = mat;
      if (ring_.dual[i] != i) st2[ring_.dual[i]] = transpose(mat);
      branch(std::move(st2));
      return;
    }
    const bool symmetric = ring_.self_dual(i);
    const int first_col = symmetric ? a : 0;
    fill_entry(i, st, mat, a, first_col);
  }

  void fill_entry(int i, const State& st, IntMatrix& mat, int a, int c) {
    if (c == m_) {
      long long ss = 0;
      for (int x = 0; x < m_; ++x)
        ss += static_cast<long long>(mat[a][x]) * mat[a][x];
      long long lo = 0, hi = 0;
      row_budget(i, st, mat, a, lo, hi);
      if (ss < lo || ss > hi) return;
      if (!cross_row_ok(i, st, mat, a)) return;
      fill_row(i, st, mat, a + 1);
      return;
    }
    const bool symmetric = ring_.self_dual(i);
    for (int v = 0; v <= cap_[i]; ++v) {
      mat[a][c] = v;
      if (symmetric) mat[c][a] = v;
      fill_entry(i, st, mat, a, c + 1);
    }
    mat[a][c] = 0;
    if (symmetric) mat[c][a] = 0;
  }

  void finish(const State& st) {
    NimRep rep;
    rep.dim = m_;
    for (int i = 0; i < ring_.rank; ++i) rep.matrices.push_back(*st[i]);
    std::string why;
    if (!is_nimrep(ring_, rep, &why)) return;
    canon_.insert(canonical_flat(rep));
  }

  std::vector<int> canonical_flat(const NimRep& rep) const {
    std::vector<int> perm(m_);
    for (int t = 0; t < m_; ++t) perm[t] = t;
    std::vector<int> best;
    std::vector<int> flat(ring_.rank * m_ * m_);
    do {
      std::size_t t = 0;
      for (int i = 0; i < ring_.rank; ++i)
        for (int x = 0; x < m_; ++x)
          for (int y = 0; y < m_; ++y)
            flat[t++] = rep.matrices[i][perm[x]][perm[y]];
      if (best.empty() || flat < best) best = flat;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  const FusionRing& ring_;
  int m_;
  FPData fp_;
  std::vector<int> cap_;
  std::vector<int> free_;
  std::set<std::vector<int>> canon_;
};

}  // namespace

bool is_nimrep(const FusionRing& ring, const NimRep& rep, std::string* why) {
  const int r = ring.rank;
  const int m = rep.dim;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (static_cast<int>(rep.matrices.size()) != r)
    return fail("one matrix per simple object is required");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rep.matrices[i].size()) != m)
      return fail("matrix of " + ring.labels[i] + " is not dim x dim");
    for (const auto& row : rep.matrices[i]) {
      if (static_cast<int>(row.size()) != m)
        return fail("matrix of " + ring.labels[i] + " is not dim x dim");
      for (int v : row)
        if (v < 0) return fail("matrix of " + ring.labels[i] + " has a negative entry");
    }
  }
  if (rep.matrices[0] != identity_matrix(m))
    return fail("the unit must act as the identity matrix");
  for (int i = 0; i < r; ++i) {
    if (ring.dual[i] < 0) return fail("object " + ring.labels[i] + " has no dual");
    if (rep.matrices[ring.dual[i]] != transpose(rep.matrices[i]))
      return fail("n_{i*} = n_i^T fails for " + ring.labels[i]);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IntMatrix rhs(m, std::vector<int>(m, 0));
      for (int k = 0; k < r; ++k) {
        const int mult = ring.N[i][j][k];
        if (mult == 0) continue;
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) rhs[x][y] += mult * rep.matrices[k][x][y];
      }
      if (multiply(rep.matrices[i], rep.matrices[j]) != rhs)
        return fail("n_i n_j = sum_k N_{ij}^k n_k fails for (" +
                    ring.labels[i] + ", " + ring.labels[j] + ")");
    }
  return true;
}

std::vector<NimRep> search_nimreps(const FusionRing& ring, int dim) {
  require_valid(ring);
  for (int i = 0; i < ring.rank; ++i)
    for (int j = 0; j < ring.rank; ++j)
      for (int k = 0; k < ring.rank; ++k)
        if (ring.N[i][j][k] != ring.N[j][i][k])
          throw InvalidInput("NIM-rep search needs a commutative fusion ring");
  if (dim < 1)
    throw InvalidInput("NIM-rep dimension must be positive");
  if (dim > 8)
    throw InvalidInput(
        "NIM-rep search is supported up to dimension 8 (got " +
        std::to_string(dim) + ")");
  NimSearcher searcher(ring, dim);
  return searcher.run();
}

std::optional<ModuleIdentification> identify_modules(
    const ModularData& md, const std::vector<int>& algebra, const NimRep& rep) {
  const FusionRing& ring = md.ring;
  const int r = ring.rank;
  const int m = rep.dim;
  if (static_cast<int>(algebra.size()) != r)
    throw InvalidInput("algebra multiplicity vector length differs from rank");
  if (algebra[0] != 1)
    throw InvalidInput("a connected algebra contains the unit exactly once");
  for (int v : algebra)
    if (v < 0) throw InvalidInput("algebra multiplicities must be non-negative");

  const FPData fp = fpdim(ring);
  double fpA = 0.0, dA = 0.0;
  for (int i = 0; i < r; ++i) {
    fpA += algebra[i] * fp.fpdim_simple[i];
    dA += algebra[i] * md.d[i];
  }
  if (std::abs(dA) < 1e-9) return std::nullopt;  // quantum dims undefined
  const double target = fp.fpdim_total / fpA;

  for (int a0 = 0; a0 < m; ++a0) {
    bool anchored = true;
    for (int i = 0; i < r && anchored; ++i)
      if (rep.matrices[i][a0][a0] != algebra[i]) anchored = false;
    if (!anchored) continue;

    ModuleIdentification ident;
    ident.anchor = a0;
    ident.images.assign(m, std::vector<int>(r, 0));
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < r; ++i) ident.images[a][i] = rep.matrices[i][a0][a];

    double total = 0.0;
    for (int a = 0; a < m; ++a) {
      double fpm = 0.0;
      for (int i = 0; i < r; ++i) fpm += ident.images[a][i] * fp.fpdim_simple[i];
      total += (fpm / fpA) * (fpm / fpA);
    }
    if (std::abs(total - target) > 1e-6 * std::max(1.0, target)) continue;

    ident.module_qdims.assign(m, 0.0);
    for (int a = 0; a < m; ++a) {
      double q = 0.0;
      for (int i = 0; i < r; ++i) q += ident.images[a][i] * md.d[i];
      ident.module_qdims[a] = q / dA;
    }
    return ident;
  }
  return std::nullopt;
}

}  // namespace mfc
