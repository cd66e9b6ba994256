#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

std::vector<std::vector<int>> brute_candidates(const std::vector<double>& fp,
                                               double total, double tol) {
  const std::size_t rank = fp.size();
  const int cap = static_cast<int>(std::floor(std::sqrt(total) + tol));
  std::vector<std::vector<int>> out;
  std::vector<int> n(rank, 0);
  n[0] = 1;

  // Odometer over n[1..rank-1], each digit in [0, cap]; lexicographic by
  // construction (most significant digit first).
  while (true) {
    double fpdim_a = 0.0;
    for (std::size_t j = 0; j < rank; ++j) fpdim_a += n[j] * fp[j];
    if (fpdim_a * fpdim_a <= total + tol) out.push_back(n);

    std::size_t pos = rank;
    while (pos > 1) {
      --pos;
      if (n[pos] < cap) {
        ++n[pos];
        for (std::size_t q = pos + 1; q < rank; ++q) n[q] = 0;
        break;
      }
      if (pos == 1) return out;
    }
    if (rank == 1) return out;  // only the trivial vector exists
  }
}

namespace {

bool preserves_tensor(const Tensor& N, const std::vector<int>& sigma) {
  const std::size_t r = N.size();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (N[sigma[i]][sigma[j]][sigma[k]] != N[i][j][k]) return false;
  return true;
}

bool maps_variant(const std::vector<int>& sigma, const RawVariant& a,
                  const RawVariant& b, double tol) {
  // b is the image of a under sigma: b[sigma(i)] = a[i].
  for (std::size_t i = 0; i < a.d.size(); ++i) {
    if (std::fabs(b.d[sigma[i]] - a.d[i]) > tol) return false;
    if (b.h[sigma[i]] != a.h[i]) return false;
  }
  return true;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t orbit_count(const Tensor& N, const std::vector<RawVariant>& raw,
                        double tol) {
  const std::size_t r = N.size();
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);

  // All permutations fixing index 0 that preserve N.
  std::vector<std::vector<int>> autos;
  std::vector<int> tail(idx.begin() + 1, idx.end());
  std::sort(tail.begin(), tail.end());
  do {
    std::vector<int> sigma(1, 0);
    sigma.insert(sigma.end(), tail.begin(), tail.end());
    if (preserves_tensor(N, sigma)) autos.push_back(sigma);
  } while (std::next_permutation(tail.begin(), tail.end()));

  std::vector<int> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t a = 0; a < raw.size(); ++a)
    for (std::size_t b = a + 1; b < raw.size(); ++b)
      for (const auto& sigma : autos)
        if (maps_variant(sigma, raw[a], raw[b], tol)) {
          int ra = find_root(parent, static_cast<int>(a));
          int rb = find_root(parent, static_cast<int>(b));
          if (ra != rb) parent[rb] = ra;
          break;
        }

  std::size_t classes = 0;
  for (std::size_t a = 0; a < raw.size(); ++a)
    if (find_root(parent, static_cast<int>(a)) == static_cast<int>(a)) ++classes;
  return classes;
}

namespace {

CMat multiply(const CMat& a, const CMat& b) {
  const std::size_t r = a.size();
  CMat c(r, std::vector<std::complex<double>>(r, 0.0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

double phase_central_charge(const CMat& s,
                            const std::vector<std::complex<double>>& t_diag) {
  const std::size_t r = s.size();
  CMat st = s;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) st[i][j] = s[i][j] * t_diag[j];
  CMat st3 = multiply(multiply(st, st), st);

  // In the S convention used throughout (entries built from N_{i,j}^k, not
  // N_{i*,j}^k), (S T)^3 is proportional to the identity: the
  // charge-conjugation factor coming from S^2 cancels. Read the phase off
  // the largest diagonal entry.
  std::size_t bi = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < r; ++i)
    if (std::abs(st3[i][i]) > best) {
      best = std::abs(st3[i][i]);
      bi = i;
    }
  double c = std::arg(st3[bi][bi]) * 8.0 / (2.0 * M_PI);
  c = std::fmod(c, 8.0);
  if (c < 0.0) c += 8.0;
  return c;
}

}  // namespace oracle
