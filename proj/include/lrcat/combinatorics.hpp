#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lrcat/checked.hpp"
#include "lrcat/errors.hpp"

namespace lrcat {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  // r * (n-k+i) is divisible by i at every step
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

inline std::int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// Visits every k-subset of {0,...,n-1}, as a sorted index vector, in
// lexicographic order. k == 0 visits the empty subset once.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace lrcat
