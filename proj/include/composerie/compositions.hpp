#pragma once

// Weighted composition counts C(n, k) and C(n) = sum_k C(n, k), computed
// three ways: the recurrence over k, coefficient extraction from the k-th
// power of the weight series, and exhaustive enumeration.

#include "composerie/ring.hpp"
#include "composerie/series.hpp"
#include "composerie/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace composerie {

inline constexpr std::size_t kDefaultOracleMax = 18;

/// The triangle C(n, k), 0 <= k <= n <= max_n, with row totals C(n).
template <CommutativeRing R>
struct CompositionTable {
  using value_type = typename R::value_type;

  std::size_t max_n = 0;
  std::vector<std::vector<value_type>> cells;  // cells[n] has n + 1 entries
  std::vector<value_type> row_totals;

  const value_type& at(std::size_t n, std::size_t k) const { return cells.at(n).at(k); }
};

namespace detail {

/// Dense table[j][c] = C(j, c) for j <= n, c <= k.
template <CommutativeRing R>
std::vector<std::vector<typename R::value_type>> recurrence_table(
    const R& ring, const std::vector<typename R::value_type>& w, std::size_t n, std::size_t k) {
  std::vector<std::vector<typename R::value_type>> t(n + 1,
                                                     std::vector<typename R::value_type>(k + 1, ring.zero()));
  t[0][0] = ring.one();
  for (std::size_t j = 1; j <= n; ++j) {
    if (k >= 1) t[j][1] = w[j - 1];
    for (std::size_t c = 2; c <= std::min(j, k); ++c) {
      auto acc = ring.zero();
      for (std::size_t i = 0; i + c <= j; ++i) acc += w[i] * t[j - i - 1][c - 1];
      t[j][c] = acc;
    }
  }
  return t;
}

}  // namespace detail

/// C(n, k) from C(n, k) = sum_{i=0}^{n-k} r_i C(n-i-1, k-1), with
/// C(0,0) = 1, C(n,1) = r_{n-1}, C(n,0) = 0 for n > 0 and C(n,k) = 0 for k > n.
template <CommutativeRing R>
typename R::value_type count_rec(const R& ring, const WeightSequence& r, std::size_t n,
                                 std::size_t k) {
  if (k > n) return ring.zero();
  auto w = weights_prefix(ring, r, n);
  return detail::recurrence_table(ring, w, n, k)[n][k];
}

/// C(n) from C(0) = 1, C(n) = sum_{i=0}^{n-1} r_i C(n-i-1).
template <CommutativeRing R>
typename R::value_type count_all_rec(const R& ring, const WeightSequence& r, std::size_t n) {
  auto w = weights_prefix(ring, r, n);
  std::vector<typename R::value_type> total(n + 1, ring.zero());
  total[0] = ring.one();
  for (std::size_t j = 1; j <= n; ++j) {
    auto acc = ring.zero();
    for (std::size_t i = 0; i < j; ++i) acc += w[i] * total[j - i - 1];
    total[j] = acc;
  }
  return total[n];
}

/// C(n, k) as the coefficient of x^{n-k} in (sum_i r_i x^i)^k.
template <CommutativeRing R>
typename R::value_type count_via_gf(const R& ring, const WeightSequence& r, std::size_t n,
                                    std::size_t k) {
  if (k > n) return ring.zero();
  const std::size_t order = n - k + 1;
  auto series = series_pow(series_from_weights(ring, r, order), k);
  return coeff(series, n - k);
}

/// C(n) = sum_{k=1}^{n} [x^{n-k}] (sum_i r_i x^i)^k, and C(0) = 1.
template <CommutativeRing R>
typename R::value_type count_all_via_gf(const R& ring, const WeightSequence& r, std::size_t n) {
  if (n == 0) return ring.one();
  auto acc = ring.zero();
  for (std::size_t k = 1; k <= n; ++k) acc += count_via_gf(ring, r, n, k);
  return acc;
}

class OracleRangeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive sum over all compositions n = p_1 + ... + p_k (p_j >= 1) of
/// prod_j r_{p_j - 1}. Refuses n > oracle_max.
template <CommutativeRing R>
typename R::value_type oracle_count(const R& ring, const WeightSequence& r, std::size_t n,
                                    std::size_t k, std::size_t oracle_max = kDefaultOracleMax) {
  if (n > oracle_max) {
    throw OracleRangeError("oracle_count: n = " + std::to_string(n) + " exceeds the oracle bound " +
                           std::to_string(oracle_max) +
                           " (raise it with --oracle-max or COMPOSERIE_ORACLE_MAX, or use the rec/gf pipelines)");
  }
  if (k > n) return ring.zero();
  if (k == 0) return n == 0 ? ring.one() : ring.zero();
  auto w = weights_prefix(ring, r, n);
  auto total = ring.zero();
  // remaining: what is left to distribute; slots: parts still to place.
  std::function<void(std::size_t, std::size_t, const typename R::value_type&)> walk =
      [&](std::size_t remaining, std::size_t slots, const typename R::value_type& product) {
        if (slots == 1) {
          total += product * w[remaining - 1];
          return;
        }
        for (std::size_t part = 1; part + (slots - 1) <= remaining; ++part) {
          walk(remaining - part, slots - 1, product * w[part - 1]);
        }
      };
  walk(n, k, ring.one());
  return total;
}

/// Fills the triangle row by row with the recurrence; row totals are the row
/// sums (C(0) = 1).
template <CommutativeRing R>
CompositionTable<R> build_table(const R& ring, const WeightSequence& r, std::size_t max_n) {
  auto w = weights_prefix(ring, r, max_n);
  auto dense = detail::recurrence_table(ring, w, max_n, max_n);
  CompositionTable<R> table;
  table.max_n = max_n;
  for (std::size_t n = 0; n <= max_n; ++n) {
    dense[n].resize(n + 1, ring.zero());
    auto total = n == 0 ? ring.one() : ring.zero();
    for (std::size_t k = 1; k <= n; ++k) total += dense[n][k];
    table.row_totals.push_back(total);
    table.cells.push_back(std::move(dense[n]));
  }
  return table;
}

}  // namespace composerie
