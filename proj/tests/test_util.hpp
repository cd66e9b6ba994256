#pragma once
/**
 * @file test_util.hpp
 * @brief Small helpers shared across the test files.
 */
#include <algorithm>
#include <cmath>
#include <vector>

#include "mfc/catalog.hpp"
#include "mfc/modular_data.hpp"

namespace testutil {

/// Modular data for one catalog variant.
inline mfc::ModularData variant_md(const mfc::CatalogEntry& entry, int k) {
  const mfc::CatalogVariant& v = entry.variants[k];
  return mfc::build_modular(entry.ring, v.d, v.h, v.D_sign);
}

/// Component-wise closeness of two real vectors.
inline bool approx_vec(const std::vector<double>& a, const std::vector<double>& b,
                       double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// Multiset equality of two real vectors up to tolerance.
inline bool same_multiset(std::vector<double> a, std::vector<double> b,
                          double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

/// Membership of an integer vector in a list of integer vectors.
inline bool contains_vec(const std::vector<std::vector<int>>& list,
                         const std::vector<int>& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

}  // namespace testutil
