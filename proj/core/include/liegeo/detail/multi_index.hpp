// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Small combinatorial helpers for indexing the basis of the exterior algebra:
// degree-p components are stored against lexicographically ordered strictly
// increasing multi-indices (0-based frame indices).

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace liegeo::detail {

/// Binomial coefficient for the small dimensions handled here.
inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
  return r;
}

/// All strictly increasing multi-indices of length p drawn from {0,..,n-1},
/// in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> c(p);
  for (int i = 0; i < p; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = p - 1;
    while (i >= 0 && c[i] == n - p + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

/// Position of a strictly increasing multi-index in the lexicographic order.
inline std::size_t combination_rank(const std::vector<int>& combo, int n) {
  const int p = static_cast<int>(combo.size());
  std::size_t rank = 0;
  int prev = -1;
  for (int i = 0; i < p; ++i) {
    for (int v = prev + 1; v < combo[i]; ++v) rank += binomial(n - 1 - v, p - 1 - i);
    prev = combo[i];
  }
  return rank;
}

/// Complement of a sorted multi-index within {0,..,n-1}, sorted.
inline std::vector<int> combination_complement(const std::vector<int>& combo, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - combo.size());
  std::size_t k = 0;
  for (int v = 0; v < n; ++v) {
    if (k < combo.size() && combo[k] == v) {
      ++k;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

/// Sign of the permutation that sorts the concatenation (I, J) of two disjoint
/// sorted index sets, i.e. the sign in e^I ^ e^J = sign * e^{sorted(I u J)}.
inline int merge_sign(const std::vector<int>& I, const std::vector<int>& J) {
  std::size_t inversions = 0;
  for (int j : J) {
    inversions += static_cast<std::size_t>(
        std::count_if(I.begin(), I.end(), [j](int i) { return i > j; }));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Sorts (in place) a multi-index that may be unsorted but must have distinct
/// entries, returning the sign of the sorting permutation; returns 0 when two
/// entries coincide.
inline int sort_index_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return 0;
  }
  return sign;
}

}  // namespace liegeo::detail
