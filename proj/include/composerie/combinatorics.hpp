#pragma once

// Exact combinatorial helpers shared by the closed formulas.

#include "composerie/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>

namespace composerie {

/// C(n, k), total: zero whenever k < 0 or k > n (so also for every n < 0).
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact: acc is C(n-k+i, i) here
  }
  return acc;
}

/// Number of nonnegative solutions of x_1 + ... + x_bins = total, i.e. the
/// coefficient of x^total in (1 - x)^(-bins). With no bins only total = 0 has
/// a solution, which the C(total + bins - 1, total) form misses.
inline BigInt multichoose(std::int64_t bins, std::int64_t total) {
  if (total < 0 || bins < 0) return 0;
  if (bins == 0) return total == 0 ? 1 : 0;
  return binomial(total + bins - 1, total);
}

/// k! / (i_0! i_1! ... i_s!) when the parts sum to k, otherwise 0.
inline BigInt multinomial(std::int64_t k, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != k) return 0;
  BigInt acc = 1;
  std::int64_t left = k;
  for (auto p : parts) {
    acc *= binomial(left, p);
    left -= p;
  }
  return acc;
}

/// F_n with F_1 = F_2 = 1.
inline BigInt fibonacci(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("fibonacci: n must be >= 1 (F_1 = F_2 = 1)");
  BigInt prev = 0, cur = 1;
  for (std::int64_t i = 1; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigInt power(BigInt base, std::uint64_t exp) {
  BigInt acc = 1;
  while (exp != 0) {
    if (exp & 1U) acc *= base;
    base *= base;
    exp >>= 1U;
  }
  return acc;
}

}  // namespace composerie
