#pragma once

// Closed formulas for C(n, k) on the named weight families. All of them
// return exact integers; map into another ring with ring.from_integer.
//
// Every formula here returns C(0,0) = 1, 0 for k > n, and 0 for k = 0 < n,
// so only 1 <= k <= n reaches the family-specific expression.

#include "composerie/combinatorics.hpp"
#include "composerie/ring.hpp"
#include "composerie/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace composerie {

namespace detail {

inline std::optional<BigInt> degenerate(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  if (n == 0) return BigInt(1);
  if (k == 0) return BigInt(0);
  return std::nullopt;
}

inline void require_param(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Calls visit(counts) for every nonnegative (c_1..c_s) with
/// sum_j c_j <= max_total and sum_j cost[j] * c_j == target.
inline void for_each_weighted_solution(std::span<const std::int64_t> cost, std::int64_t max_total,
                                       std::int64_t target,
                                       const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> counts(cost.size(), 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t j, std::int64_t used, std::int64_t left) {
        if (j == cost.size()) {
          if (left == 0) visit(counts);
          return;
        }
        for (std::int64_t c = 0; used + c <= max_total && cost[j] * c <= left; ++c) {
          counts[j] = c;
          walk(j + 1, used + c, left - cost[j] * c);
        }
        counts[j] = 0;
      };
  walk(0, 0, target);
}

}  // namespace detail

/// Ordinary compositions: C(n-1, k-1).
inline BigInt closed_all_ones(std::int64_t n, std::int64_t k) {
  if (auto d = detail::degenerate(n, k)) return *d;
  return binomial(n - 1, k - 1);
}

/// r_i = 1 for i <= m: nonnegative solutions of i_1 + ... + i_k = n - k with
/// every i_j <= m, by inclusion-exclusion over the variables exceeding m.
inline BigInt closed_bounded(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (auto d = detail::degenerate(n, k)) return *d;
  BigInt acc = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * multichoose(k, n - k - j * (m + 1));
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

/// Parts in {1, m_1, ..., m_s}: sum of k!/(i_0! i_1! ... i_s!) over
/// i_0 + ... + i_s = k and (m_1 - 1) i_1 + ... + (m_s - 1) i_s = n - k.
/// `large_parts` holds m_1..m_s (distinct, each >= 2).
inline BigInt closed_allowed_set(std::int64_t n, std::int64_t k,
                                 std::span<const std::uint64_t> large_parts) {
  if (auto d = detail::degenerate(n, k)) return *d;
  std::vector<std::int64_t> cost;
  for (auto m : large_parts) cost.push_back(static_cast<std::int64_t>(m) - 1);
  BigInt acc = 0;
  std::vector<std::int64_t> blocks(cost.size() + 1);
  detail::for_each_weighted_solution(cost, k, n - k, [&](const std::vector<std::int64_t>& c) {
    std::int64_t used = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      blocks[j + 1] = c[j];
      used += c[j];
    }
    blocks[0] = k - used;
    acc += multinomial(k, blocks);
  });
  return acc;
}

/// Parts in {1, m}: C(k, (n-k)/(m-1)) when (m-1) | (n-k), else 0.
inline BigInt closed_one_or_m(std::int64_t n, std::int64_t k, std::int64_t m) {
  detail::require_param(m >= 2, "closed_one_or_m: m must be >= 2");
  if (auto d = detail::degenerate(n, k)) return *d;
  if ((n - k) % (m - 1) != 0) return 0;
  return binomial(k, (n - k) / (m - 1));
}

/// All compositions with parts in {1, m}: sum_{j=0}^{floor(n/m)} C(n-(m-1)j, j).
inline BigInt closed_one_or_m_all(std::int64_t n, std::int64_t m) {
  detail::require_param(m >= 2, "closed_one_or_m_all: m must be >= 2");
  BigInt acc = 0;
  for (std::int64_t j = 0; j <= n / m; ++j) acc += binomial(n - (m - 1) * j, j);
  return acc;
}

/// Parts congruent to 1 mod m: C((n-k)/m + k - 1, (n-k)/m) when m | (n-k).
inline BigInt closed_residue(std::int64_t n, std::int64_t k, std::int64_t m) {
  detail::require_param(m >= 1, "closed_residue: m must be >= 1");
  if (auto d = detail::degenerate(n, k)) return *d;
  if ((n - k) % m != 0) return 0;
  return multichoose(k, (n - k) / m);
}

/// No part equal to 2: c_n(n) = 1, c_{n-1}(n) = 0, otherwise
/// sum_{i=1}^{floor((n-k)/2)} C(k, i) C(n-k-i-1, i-1).
inline BigInt closed_no_two(std::int64_t n, std::int64_t k) {
  if (auto d = detail::degenerate(n, k)) return *d;
  if (k == n) return 1;
  if (k == n - 1) return 0;
  BigInt acc = 0;
  for (std::int64_t i = 1; i <= (n - k) / 2; ++i) acc += binomial(k, i) * binomial(n - k - i - 1, i - 1);
  return acc;
}

/// c_k(k + 8) = k + 5 C(k,2) + 6 C(k,3) + C(k,4) for compositions avoiding 2.
inline BigInt no_two_excess_eight(std::int64_t k) {
  return BigInt(k) + 5 * binomial(k, 2) + 6 * binomial(k, 3) + binomial(k, 4);
}

/// No part equal to m (m >= 2). Expands
///   [(1 + x + ... + x^{m-2}) + x^m (1 + x + x^2 + ...)]^k
/// binomially in the two summands, the first by the multinomial theorem, and
/// reads off x^{n-k}:
///   sum_i C(k,i) sum_{i_0+...+i_{m-2} = k-i} (k-i; i_0..i_{m-2})
///         * multichoose(i, n - k - m i - (1 i_1 + ... + (m-2) i_{m-2})).
inline BigInt closed_no_m(std::int64_t n, std::int64_t k, std::int64_t m) {
  detail::require_param(m >= 2, "closed_no_m: forbidden part must be >= 2");
  if (auto d = detail::degenerate(n, k)) return *d;
  BigInt acc = 0;
  // Exponent contributed by i_1..i_{m-2}; i_0 contributes nothing.
  std::vector<std::int64_t> cost;
  for (std::int64_t j = 1; j <= m - 2; ++j) cost.push_back(j);
  std::vector<std::int64_t> blocks(static_cast<std::size_t>(m - 1));
  for (std::int64_t i = 0; i <= k; ++i) {
    const std::int64_t budget = n - k - m * i;
    if (budget < 0) break;
    const BigInt outer = binomial(k, i);
    // spent: exponent taken by the polynomial factor; the tail takes the rest.
    for (std::int64_t spent = 0; spent <= budget; ++spent) {
      const BigInt tail = multichoose(i, budget - spent);
      if (tail == 0) continue;
      detail::for_each_weighted_solution(cost, k - i, spent, [&](const std::vector<std::int64_t>& c) {
        std::int64_t used = 0;
        for (std::size_t j = 0; j < c.size(); ++j) {
          blocks[j + 1] = c[j];
          used += c[j];
        }
        blocks[0] = k - i - used;
        acc += outer * multinomial(k - i, blocks) * tail;
      });
    }
  }
  return acc;
}

/// No part equal to 3:
///   sum_{j=0}^{k} sum_{i=0}^{min(k-j, floor((n-2k+j)/2))}
///       C(k,i) C(k-i,j) C(n-2k+j-i-1, i-1),
/// where the last factor is the stars-and-bars count multichoose(i, n-2k+j-2i)
/// (it is [n-2k+j = 0] when i = 0).
inline BigInt closed_no_three(std::int64_t n, std::int64_t k) {
  if (auto d = detail::degenerate(n, k)) return *d;
  BigInt acc = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    const std::int64_t top = std::min(k - j, detail::floor_div(n - 2 * k + j, 2));
    for (std::int64_t i = 0; i <= top; ++i) {
      acc += binomial(k, i) * binomial(k - i, j) * multichoose(i, n - 2 * k + j - 2 * i);
    }
  }
  return acc;
}

/// r_0 = 1 + m, r_i = 1 otherwise: (1+m)^k on the diagonal, else
/// sum_{i=1}^{k} C(k,i) C(n-k+i-1, i-1) m^{k-i}.
inline BigInt closed_two_type_ones(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (auto d = detail::degenerate(n, k)) return *d;
  if (n == k) return power(BigInt(1 + m), static_cast<std::uint64_t>(k));
  BigInt acc = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc += binomial(k, i) * binomial(n - k + i - 1, i - 1) * power(BigInt(m), static_cast<std::uint64_t>(k - i));
  }
  return acc;
}

/// r_i = C(m, i): C(mk, n-k).
inline BigInt closed_binomial_weights(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (auto d = detail::degenerate(n, k)) return *d;
  return binomial(m * k, n - k);
}

/// r_i = C(i+m-1, i): C(n-k+mk-1, n-k).
inline BigInt closed_pyramidal_weights(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (auto d = detail::degenerate(n, k)) return *d;
  return binomial(n - k + m * k - 1, n - k);
}

/// r_i = (i+1)^2. The weight series is (1+x)/(1-x)^3, so
/// C(n,k) = sum_{i=0}^{min(k, n-k)} C(k,i) C(n-k-i+3k-1, n-k-i).
inline BigInt closed_square_weights(std::int64_t n, std::int64_t k) {
  if (auto d = detail::degenerate(n, k)) return *d;
  BigInt acc = 0;
  for (std::int64_t i = 0; i <= std::min(k, n - k); ++i) acc += binomial(k, i) * multichoose(3 * k, n - k - i);
  return acc;
}

/// A closed formula evaluated at (n, k), tagged by name.
struct ClosedValue {
  std::string formula;
  BigInt value;
};

/// Every closed formula that applies to the family at (n, k). Empty for
/// families without one (explicit weights).
inline std::vector<ClosedValue> closed_forms_for(const Family& f, std::int64_t n, std::int64_t k) {
  const auto m = static_cast<std::int64_t>(f.m);
  std::vector<ClosedValue> out;
  switch (f.name) {
    case FamilyName::AllOnes:
      out.push_back({"closed_all_ones", closed_all_ones(n, k)});
      break;
    case FamilyName::Bounded:
      out.push_back({"closed_bounded", closed_bounded(n, k, m)});
      break;
    case FamilyName::AllowedSet: {
      std::vector<std::uint64_t> large;
      for (auto p : detail::normalized_allowed_set(f)) {
        if (p != 1) large.push_back(p);
      }
      out.push_back({"closed_allowed_set", closed_allowed_set(n, k, large)});
      break;
    }
    case FamilyName::OneOrM: {
      const std::uint64_t large[] = {f.m};
      out.push_back({"closed_allowed_set", closed_allowed_set(n, k, large)});
      out.push_back({"closed_one_or_m", closed_one_or_m(n, k, m)});
      break;
    }
    case FamilyName::Residue1Mod:
      out.push_back({"closed_residue", closed_residue(n, k, m)});
      break;
    case FamilyName::NoPart:
      out.push_back({"closed_no_m", closed_no_m(n, k, m)});
      if (m == 2) out.push_back({"closed_no_two", closed_no_two(n, k)});
      if (m == 3) out.push_back({"closed_no_three", closed_no_three(n, k)});
      break;
    case FamilyName::TwoTypeOnes:
      out.push_back({"closed_two_type_ones", closed_two_type_ones(n, k, m)});
      break;
    case FamilyName::Binomial:
      out.push_back({"closed_binomial_weights", closed_binomial_weights(n, k, m)});
      break;
    case FamilyName::Pyramidal:
      out.push_back({"closed_pyramidal_weights", closed_pyramidal_weights(n, k, m)});
      break;
    case FamilyName::Squares:
      out.push_back({"closed_square_weights", closed_square_weights(n, k)});
      break;
    case FamilyName::Explicit:
      break;
  }
  return out;
}

/// The family's primary closed formula at (n, k), if it has one.
inline std::optional<BigInt> closed_count(const Family& f, std::int64_t n, std::int64_t k) {
  auto all = closed_forms_for(f, n, k);
  if (all.empty()) return std::nullopt;
  return all.front().value;
}

}  // namespace composerie
