#pragma once
/**
 * @file oracles.hpp
 * @brief Independent brute-force reference implementations used to cross-check
 *        the library. Deliberately self-contained: no library headers, plain
 *        STL containers only, and the dumbest correct algorithms we could write.
 */
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Tensor = std::vector<std::vector<std::vector<int>>>;      // N[i][j][k]
using CMat = std::vector<std::vector<std::complex<double>>>;

/// Exhaustive candidate scan: all multiplicity vectors n (n[0] = 1) with every
/// entry bounded by floor(sqrt(total)) and (sum_j n_j * fp_j)^2 <= total + tol,
/// in lexicographic order. No per-entry cleverness — the point is independence.
std::vector<std::vector<int>> brute_candidates(const std::vector<double>& fp,
                                               double total, double tol);

/// A (d, h) assignment; h entries are exact rationals stored as (num, den),
/// reduced, with 0 <= num < den.
struct RawVariant {
  std::vector<double> d;
  std::vector<std::pair<std::int64_t, std::int64_t>> h;
};

/// Number of equivalence classes of `raw` under *all* unit-fixing permutations
/// that preserve the fusion tensor exactly. Union-find over a quadratic scan.
std::size_t orbit_count(const Tensor& N, const std::vector<RawVariant>& raw,
                        double tol);

/// Numeric central charge: builds (S T)^3 from the normalized S matrix and
/// the diagonal of T; the cube is proportional to the identity in this S
/// convention, so the phase is read off its largest diagonal entry and
/// returned as 8 * arg / (2 pi) reduced into [0, 8).
double phase_central_charge(const CMat& s_normalized,
                            const std::vector<std::complex<double>>& t_diag);

}  // namespace oracle
