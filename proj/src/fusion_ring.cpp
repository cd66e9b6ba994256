#include "mfc/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "mfc/errors.hpp"

namespace mfc {

FusionRing make_fusion_ring(std::vector<std::string> labels, FusionTensor N) {
  FusionRing ring;
  ring.rank = static_cast<int>(labels.size());
  if (ring.rank <= 0) throw InvalidInput("ring must have positive rank");
  if (static_cast<int>(N.size()) != ring.rank)
    throw InvalidInput("fusion tensor first dimension does not match rank");
  for (const auto& plane : N) {
    if (static_cast<int>(plane.size()) != ring.rank)
      throw InvalidInput("fusion tensor second dimension does not match rank");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != ring.rank)
        throw InvalidInput("fusion tensor third dimension does not match rank");
  }
  ring.labels = std::move(labels);
  ring.N = std::move(N);

  ring.dual.assign(ring.rank, -1);
  for (int i = 0; i < ring.rank; ++i) {
    int partner = -1;
    bool unique = true;
    for (int j = 0; j < ring.rank; ++j)
      if (ring.N[i][j][0] > 0) {
        if (partner >= 0) unique = false;
        partner = j;
      }
    if (unique && partner >= 0 && ring.N[i][partner][0] == 1)
      ring.dual[i] = partner;
  }
  return ring;
}

std::vector<ValidationIssue> validate_ring(const FusionRing& ring) {
  std::vector<ValidationIssue> issues;
  const int r = ring.rank;

  for (int i = 0; i < r && issues.size() < 32; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N[i][j][k] < 0) {
          issues.push_back({"negativity",
                            "N[" + std::to_string(i) + "][" + std::to_string(j) +
                                "][" + std::to_string(k) + "] < 0"});
        }

  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      if (ring.N[0][j][k] != (j == k ? 1 : 0))
        issues.push_back({"unit", "left unit fails at N[0][" +
                                      std::to_string(j) + "][" +
                                      std::to_string(k) + "]"});
      if (ring.N[j][0][k] != (j == k ? 1 : 0))
        issues.push_back({"unit", "right unit fails at N[" +
                                      std::to_string(j) + "][0][" +
                                      std::to_string(k) + "]"});
    }

  bool assoc_ok = true;
  for (int i = 0; i < r && assoc_ok; ++i)
    for (int j = 0; j < r && assoc_ok; ++j)
      for (int k = 0; k < r && assoc_ok; ++k)
        for (int l = 0; l < r; ++l) {
          long lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += static_cast<long>(ring.N[i][j][m]) * ring.N[m][k][l];
            rhs += static_cast<long>(ring.N[j][k][m]) * ring.N[i][m][l];
          }
          if (lhs != rhs) {
            issues.push_back(
                {"associativity",
                 "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" +
                     std::to_string(k) + " != b" + std::to_string(i) + " (b" +
                     std::to_string(j) + " b" + std::to_string(k) +
                     ") in component " + std::to_string(l)});
            assoc_ok = false;
            break;
          }
        }

  for (int i = 0; i < r; ++i) {
    int hits = 0;
    for (int j = 0; j < r; ++j) hits += ring.N[i][j][0];
    if (hits != 1 || ring.dual[i] < 0) {
      issues.push_back({"duality", "object " + std::to_string(i) +
                                       " has no unique dual (unit appears " +
                                       std::to_string(hits) + " times)"});
    }
  }
  // dual must be an involution when defined everywhere.
  bool all_defined =
      std::all_of(ring.dual.begin(), ring.dual.end(), [](int d) { return d >= 0; });
  if (all_defined) {
    for (int i = 0; i < r; ++i)
      if (ring.dual[ring.dual[i]] != i) {
        issues.push_back(
            {"duality", "dual is not an involution at object " + std::to_string(i)});
        break;
      }
  }
  return issues;
}

void require_valid(const FusionRing& ring) {
  auto issues = validate_ring(ring);
  if (issues.empty()) return;
  std::string msg = "invalid fusion ring:";
  for (const auto& is : issues) msg += "\n  [" + is.axiom + "] " + is.detail;
  throw InvalidInput(msg);
}

FPData fpdim(const FusionRing& ring) {
  const int r = ring.rank;
  // Individual fusion matrices can carry a second eigenvalue of modulus
  // lambda_max (e.g. a -lambda_max branch), which stalls naive per-matrix
  // power iteration.  The sum M = sum_i N_i is entrywise positive for any
  // fusion ring (b always appears in some i (x) a), so its Perron eigenvalue
  // is strictly dominant and iteration converges geometrically.  Because the
  // fusion matrices commute, the Perron line of M is a common eigenvector,
  // and each N_i acts on it by its own spectral radius (Collatz-Wielandt:
  // a nonnegative matrix with a strictly positive eigenvector attains its
  // spectral radius there).
  std::vector<double> v(r, 1.0), w(r, 0.0);
  for (int iter = 0; iter < 20000; ++iter) {
    double lambda = 0.0;
    for (int a = 0; a < r; ++a) {
      double s = 0.0;
      for (int i = 0; i < r; ++i)
        for (int b = 0; b < r; ++b) s += ring.N[i][a][b] * v[b];
      w[a] = s;
    }
    // Rayleigh quotient for the eigenvalue estimate.
    double num = 0.0, den = 0.0;
    for (int a = 0; a < r; ++a) {
      num += w[a] * v[a];
      den += v[a] * v[a];
    }
    lambda = num / den;
    double norm = 0.0;
    for (double x : w) norm = std::max(norm, std::fabs(x));
    for (int a = 0; a < r; ++a) v[a] = w[a] / norm;
    double resid = 0.0;
    for (int a = 0; a < r; ++a) {
      double s = 0.0;
      for (int i = 0; i < r; ++i)
        for (int b = 0; b < r; ++b) s += ring.N[i][a][b] * v[b];
      resid = std::max(resid, std::fabs(s - lambda * v[a]));
    }
    if (resid <= 1e-12 * std::max(1.0, std::fabs(lambda))) break;
  }
  FPData out;
  out.fpdim_simple.resize(r);
  for (int i = 0; i < r; ++i) {
    // Rayleigh quotient of N_i on the common Perron eigenvector.
    double num = 0.0, den = 0.0;
    for (int a = 0; a < r; ++a) {
      double s = 0.0;
      for (int b = 0; b < r; ++b) s += ring.N[i][a][b] * v[b];
      num += s * v[a];
      den += v[a] * v[a];
    }
    out.fpdim_simple[i] = num / den;
  }
  out.fpdim_total = 0.0;
  for (double x : out.fpdim_simple) out.fpdim_total += x * x;
  return out;
}

namespace {

bool preserves(const FusionRing& ring, const std::vector<int>& sigma) {
  const int r = ring.rank;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N[sigma[i]][sigma[j]][sigma[k]] != ring.N[i][j][k]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const FusionRing& ring) {
  const int r = ring.rank;
  std::vector<int> tail(r - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<std::vector<int>> group;
  do {
    std::vector<int> sigma(1, 0);
    sigma.insert(sigma.end(), tail.begin(), tail.end());
    if (preserves(ring, sigma)) group.push_back(sigma);
  } while (std::next_permutation(tail.begin(), tail.end()));

  // Group sanity: closed under composition and inverse.
  std::set<std::vector<int>> members(group.begin(), group.end());
  for (const auto& a : group) {
    std::vector<int> inv(r);
    for (int i = 0; i < r; ++i) inv[a[i]] = i;
    if (!members.count(inv))
      throw InternalInconsistency("automorphism set not closed under inverse");
    for (const auto& b : group) {
      std::vector<int> ab(r);
      for (int i = 0; i < r; ++i) ab[i] = a[b[i]];
      if (!members.count(ab))
        throw InternalInconsistency("automorphism set not closed under composition");
    }
  }
  return group;  // already lexicographically sorted by construction
}

FusionRing tensor_product(const FusionRing& a, const FusionRing& b) {
  const int ra = a.rank, rb = b.rank;
  const int r = ra * rb;
  auto id = [rb](int i, int x) { return i * rb + x; };

  std::vector<std::string> labels(r);
  for (int i = 0; i < ra; ++i)
    for (int x = 0; x < rb; ++x)
      labels[id(i, x)] = "(" + a.labels[i] + "," + b.labels[x] + ")";

  FusionTensor N(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j)
      for (int k = 0; k < ra; ++k) {
        if (a.N[i][j][k] == 0) continue;
        for (int x = 0; x < rb; ++x)
          for (int y = 0; y < rb; ++y)
            for (int z = 0; z < rb; ++z)
              N[id(i, x)][id(j, y)][id(k, z)] = a.N[i][j][k] * b.N[x][y][z];
      }
  return make_fusion_ring(std::move(labels), std::move(N));
}

bool is_isomorphic(const FusionRing& a, const FusionRing& b) {
  if (a.rank != b.rank) return false;
  const int r = a.rank;
  std::vector<int> tail(r - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    std::vector<int> sigma(1, 0);
    sigma.insert(sigma.end(), tail.begin(), tail.end());
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        for (int k = 0; k < r; ++k)
          if (b.N[sigma[i]][sigma[j]][sigma[k]] != a.N[i][j][k]) {
            ok = false;
            break;
          }
    if (ok) return true;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return false;
}

}  // namespace mfc
