#pragma once

// Cross-validation of the counting pipelines against each other, against
// exhaustive enumeration, and against the family closed formulas.

#include "composerie/closed_forms.hpp"
#include "composerie/combinatorics.hpp"
#include "composerie/compositions.hpp"
#include "composerie/ring.hpp"
#include "composerie/weights.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace composerie {

/// One exact comparison. `k` is empty for whole-row identities.
template <CommutativeRing R>
struct Check {
  std::string identity;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  typename R::value_type expected;
  typename R::value_type actual;
  bool pass = false;
};

template <CommutativeRing R>
Check<R> make_check(std::string identity, std::size_t n, std::optional<std::size_t> k,
                    typename R::value_type expected, typename R::value_type actual) {
  const bool pass = expected == actual;
  return {std::move(identity), n, k, std::move(expected), std::move(actual), pass};
}

template <CommutativeRing R>
struct VerificationReport {
  Family family;
  std::string ring;
  std::size_t max_n = 0;
  std::size_t max_k = 0;
  std::vector<Check<R>> checks;

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check<R>& c) { return !c.pass; }));
  }
  bool passed() const { return failures() == 0; }
};

struct VerifyOptions {
  std::size_t oracle_max = kDefaultOracleMax;
};

/// F_n against the odd-part count summed over k of n's parity.
inline Check<IntegerRing> fibonacci_odd_identity(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  BigInt sum = 0;
  for (std::int64_t k = (nn % 2 == 0) ? 2 : 1; k <= nn; k += 2) sum += closed_residue(nn, k, 2);
  return make_check<IntegerRing>("fibonacci_odd", n, std::nullopt, fibonacci(nn), sum);
}

/// F_{2n+1} against the total count with two kinds of 1 (recurrence), and
/// against the same total summed over k from the closed formula.
inline std::array<Check<IntegerRing>, 2> fibonacci_two_ones_identity(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  const BigInt fib = fibonacci(2 * nn + 1);
  Family f;
  f.name = FamilyName::TwoTypeOnes;
  f.m = 1;
  const BigInt total = count_all_rec(IntegerRing{}, family_to_weights(f), n);
  BigInt per_k = 0;
  for (std::int64_t k = 1; k <= nn; ++k) per_k += closed_two_type_ones(nn, k, 1);
  return {make_check<IntegerRing>("fibonacci_two_ones_total", n, std::nullopt, fib, total),
          make_check<IntegerRing>("fibonacci_two_ones_per_k", n, std::nullopt, fib, per_k)};
}

/// Runs every applicable identity for 0 <= k <= n <= max_n:
///  - rec=gf          recurrence against series coefficient
///  - rec=oracle      recurrence against enumeration (n <= oracle_max)
///  - rec=<closed>    recurrence against each closed formula (n >= 1)
///  - row_sum         C(n) by the 1-D recurrence against the row sum
///  - row_recurrence  row sums satisfy C(n) = sum_i r_i C(n-i-1)
///  - total_gf        C(n) summed from series coefficients
/// plus the family-specific identities. Failures are recorded, never thrown.
template <CommutativeRing R>
VerificationReport<R> verify_family(const R& ring, const Family& family, std::size_t max_n,
                                    const VerifyOptions& options = {}) {
  VerificationReport<R> report{family, ring.name(), max_n, max_n, {}};
  auto& checks = report.checks;
  const auto r = family_to_weights(family);
  const auto table = build_table(ring, r, max_n);
  const auto w = weights_prefix(ring, r, max_n);

  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto rec = count_rec(ring, r, n, k);
      checks.push_back(make_check<R>("table=rec", n, k, rec, table.at(n, k)));
      checks.push_back(make_check<R>("rec=gf", n, k, rec, count_via_gf(ring, r, n, k)));
      if (n <= options.oracle_max) {
        checks.push_back(make_check<R>("rec=oracle", n, k, oracle_count(ring, r, n, k, options.oracle_max), rec));
      }
      if (n >= 1) {
        for (auto& cv : closed_forms_for(family, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) {
          checks.push_back(make_check<R>("rec=" + cv.formula, n, k, ring.from_integer(cv.value), rec));
        }
      }
    }

    const auto total = count_all_rec(ring, r, n);
    checks.push_back(make_check<R>("row_sum", n, std::nullopt, table.row_totals[n], total));
    if (n >= 1) {
      auto acc = ring.zero();
      for (std::size_t i = 0; i < n; ++i) acc += w[i] * table.row_totals[n - i - 1];
      checks.push_back(make_check<R>("row_recurrence", n, std::nullopt, table.row_totals[n], acc));
    }
    checks.push_back(make_check<R>("total_gf", n, std::nullopt, total, count_all_via_gf(ring, r, n)));

    const auto nn = static_cast<std::int64_t>(n);
    switch (family.name) {
      case FamilyName::AllOnes:
        if (n >= 1) {
          checks.push_back(make_check<R>("total=2^(n-1)", n, std::nullopt,
                                         ring.from_integer(power(BigInt(2), n - 1)), total));
        }
        break;
      case FamilyName::OneOrM:
        checks.push_back(make_check<R>("closed_one_or_m_all", n, std::nullopt,
                                       ring.from_integer(closed_one_or_m_all(nn, static_cast<std::int64_t>(family.m))),
                                       total));
        if (family.m == 2) {
          checks.push_back(make_check<R>("total=F(n+1)", n, std::nullopt, ring.from_integer(fibonacci(nn + 1)), total));
        }
        break;
      case FamilyName::Residue1Mod:
        if (family.m == 2 && n >= 1) {
          checks.push_back(make_check<R>("total=F(n)", n, std::nullopt, ring.from_integer(fibonacci(nn)), total));
          auto odd = fibonacci_odd_identity(n);
          checks.push_back(make_check<R>(odd.identity, n, std::nullopt, ring.from_integer(odd.expected),
                                         ring.from_integer(odd.actual)));
        }
        break;
      case FamilyName::TwoTypeOnes:
        if (family.m == 1 && n >= 1) {
          for (auto& c : fibonacci_two_ones_identity(n)) {
            checks.push_back(make_check<R>(c.identity, n, std::nullopt, ring.from_integer(c.expected),
                                           ring.from_integer(c.actual)));
          }
        }
        break;
      case FamilyName::NoPart:
        if (family.m == 2 && n >= 9) {
          const std::size_t k = n - 8;
          checks.push_back(make_check<R>("c_k(k+8)", n, k, ring.from_integer(no_two_excess_eight(nn - 8)),
                                         table.at(n, k)));
        }
        break;
      case FamilyName::Pyramidal:
        if (family.m == 2) {
          for (std::size_t k = 1; k <= n; ++k) {
            const auto kk = static_cast<std::int64_t>(k);
            checks.push_back(make_check<R>("pyramidal_m2=C(n+k-1,2k-1)", n, k,
                                           ring.from_integer(binomial(nn + kk - 1, 2 * kk - 1)), table.at(n, k)));
          }
        }
        break;
      default:
        break;
    }
  }
  return report;
}

/// The families run by `verify --all`. Together they reach every closed formula.
inline std::vector<Family> standard_families() {
  std::vector<Family> out;
  for (const char* spec : {"all-ones", "bounded:2", "allowed-set:1,3,5", "one-or-m:2", "one-or-m:3",
                           "residue-1-mod:2", "residue-1-mod:3", "no-part:2", "no-part:3", "no-part:4",
                           "two-type-ones:1", "two-type-ones:2", "binomial:1", "binomial:2", "binomial:3",
                           "pyramidal:1", "pyramidal:2", "pyramidal:3", "squares"}) {
    out.push_back(parse_family(spec));
  }
  return out;
}

}  // namespace composerie
