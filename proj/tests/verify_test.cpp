#include "composerie/verify.hpp"

#include <gtest/gtest.h>

#include <set>

namespace composerie {
namespace {

TEST(FibonacciIdentities, OddParts) {
  for (std::size_t n : {1u, 6u, 10u, 24u}) {
    auto c = fibonacci_odd_identity(n);
    EXPECT_TRUE(c.pass) << n;
    EXPECT_EQ(c.expected, fibonacci(static_cast<std::int64_t>(n)));
  }
  EXPECT_EQ(fibonacci_odd_identity(6).actual, 8);
  EXPECT_EQ(fibonacci_odd_identity(10).actual, 55);
}

TEST(FibonacciIdentities, TwoTypesOfOne) {
  const BigInt expected[] = {2, 5, 13};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& c : fibonacci_two_ones_identity(n)) {
      EXPECT_TRUE(c.pass);
      EXPECT_EQ(c.actual, expected[n - 1]);
    }
  }
}

TEST(VerifyFamily, PassesOnStandardFamilies) {
  for (const char* spec : {"all-ones", "no-part:2", "binomial:3"}) {
    const std::size_t max_n = std::string(spec) == "no-part:2" ? 14 : 12;
    auto rep = verify_family(IntegerRing{}, parse_family(spec), max_n);
    EXPECT_TRUE(rep.passed()) << spec;
    EXPECT_FALSE(rep.checks.empty());
  }
  EXPECT_TRUE(verify_family(IntegerRing{}, parse_family("all-ones"), 1).passed());
  EXPECT_TRUE(verify_family(IntegerRing{}, parse_family("all-ones"), 0).passed());
}

TEST(VerifyFamily, FibonacciRowsForOddParts) {
  auto rep = verify_family(IntegerRing{}, parse_family("residue-1-mod:2"), 24);
  EXPECT_TRUE(rep.passed());
  std::size_t fib_rows = 0;
  for (const auto& c : rep.checks) fib_rows += c.identity == "total=F(n)";
  EXPECT_EQ(fib_rows, 24u);
}

TEST(VerifyFamily, ExplicitWeightsOverModularRing) {
  auto rep = verify_family(ModularRing(97), parse_family("explicit:3,-5,96;tail=50"), 12);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.ring, "mod:97");
}

TEST(VerifyFamily, OracleBoundLimitsOracleRows) {
  auto rep = verify_family(IntegerRing{}, parse_family("squares"), 10, VerifyOptions{4});
  for (const auto& c : rep.checks) {
    if (c.identity == "rec=oracle") {
      EXPECT_LE(c.n, 4u);
    }
  }
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyFamily, StandardFamiliesReachEveryClosedFormula) {
  std::set<std::string> seen;
  for (const auto& f : standard_families()) {
    for (const auto& c : verify_family(IntegerRing{}, f, 9, VerifyOptions{6}).checks) seen.insert(c.identity);
  }
  for (const char* name :
       {"rec=closed_all_ones", "rec=closed_bounded", "rec=closed_allowed_set", "rec=closed_one_or_m",
        "closed_one_or_m_all", "rec=closed_residue", "fibonacci_odd", "rec=closed_no_two", "rec=closed_no_m",
        "rec=closed_no_three", "rec=closed_two_type_ones", "fibonacci_two_ones_total", "fibonacci_two_ones_per_k",
        "rec=closed_binomial_weights", "rec=closed_pyramidal_weights", "rec=closed_square_weights", "c_k(k+8)"}) {
    EXPECT_TRUE(seen.count(name)) << name;
  }
}

TEST(Check, PassIsExactEquality) {
  auto ok = make_check<IntegerRing>("x", 1, 1, BigInt(5), BigInt(5));
  auto bad = make_check<IntegerRing>("x", 1, 1, BigInt(5), BigInt(6));
  EXPECT_TRUE(ok.pass);
  EXPECT_FALSE(bad.pass);
  VerificationReport<IntegerRing> rep{Family{}, "int", 1, 1, {ok, bad}};
  EXPECT_EQ(rep.failures(), 1u);
  EXPECT_FALSE(rep.passed());
}

}  // namespace
}  // namespace composerie
