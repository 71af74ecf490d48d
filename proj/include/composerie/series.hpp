#pragma once

// Truncated formal power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} (mod x^N)
// over a commutative ring. Products truncate to the smaller order; reading a
// coefficient beyond the order is an error rather than an implicit zero.

#include "composerie/ring.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace composerie {

/// Counts series products performed by the power routines.
struct MulCounter {
  std::size_t calls = 0;
};

template <CommutativeRing R>
class TruncatedSeries {
public:
  using value_type = typename R::value_type;

  TruncatedSeries(R ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("truncated series must have order >= 1");
  }

  /// The constant series 1 of the given order.
  static TruncatedSeries one(const R& ring, std::size_t order) {
    if (order == 0) throw std::invalid_argument("truncated series must have order >= 1");
    std::vector<value_type> c(order, ring.zero());
    c[0] = ring.one();
    return {ring, std::move(c)};
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^n. Throws std::out_of_range when n >= order, which
  /// means the series was truncated too early for the question asked.
  const value_type& coeff(std::size_t n) const {
    if (n >= coeffs_.size()) {
      throw std::out_of_range("coefficient x^" + std::to_string(n) +
                              " requested from series of order " +
                              std::to_string(coeffs_.size()));
    }
    return coeffs_[n];
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  R ring_;
  std::vector<value_type> coeffs_;
};

/// Cauchy product, schoolbook O(N^2), truncated to min(a.order, b.order).
template <CommutativeRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument("series_mul: operands over different rings (" + a.ring().name() +
                                " vs " + b.ring().name() + ")");
  }
  const std::size_t order = std::min(a.order(), b.order());
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<typename R::value_type> out(order, a.ring().zero());
  for (std::size_t i = 0; i < order; ++i) {
    if (x[i] == a.ring().zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) out[i + j] += x[i] * y[j];
  }
  return {a.ring(), std::move(out)};
}

template <CommutativeRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b,
                              MulCounter& counter) {
  ++counter.calls;
  return series_mul(a, b);
}

/// a^k by left-to-right binary exponentiation. Uses
/// floor(log2 k) + popcount(k) - 1 products for k >= 1; k = 0 gives 1.
template <CommutativeRing R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, std::uint64_t k, MulCounter& counter) {
  if (k == 0) return TruncatedSeries<R>::one(a.ring(), a.order());
  TruncatedSeries<R> acc = a;
  for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
    acc = series_mul(acc, acc, counter);
    if ((k >> bit) & 1U) acc = series_mul(acc, a, counter);
  }
  return acc;
}

template <CommutativeRing R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, std::uint64_t k) {
  MulCounter ignored;
  return series_pow(a, k, ignored);
}

/// a^k by k - 1 successive products. Baseline for the squaring route.
template <CommutativeRing R>
TruncatedSeries<R> series_pow_naive(const TruncatedSeries<R>& a, std::uint64_t k,
                                    MulCounter& counter) {
  if (k == 0) return TruncatedSeries<R>::one(a.ring(), a.order());
  TruncatedSeries<R> acc = a;
  for (std::uint64_t i = 1; i < k; ++i) acc = series_mul(acc, a, counter);
  return acc;
}

template <CommutativeRing R>
TruncatedSeries<R> series_pow_naive(const TruncatedSeries<R>& a, std::uint64_t k) {
  MulCounter ignored;
  return series_pow_naive(a, k, ignored);
}

/// Coefficient extraction; same contract as TruncatedSeries::coeff.
template <CommutativeRing R>
const typename R::value_type& coeff(const TruncatedSeries<R>& a, std::size_t n) {
  return a.coeff(n);
}

}  // namespace composerie
