#include "composerie/combinatorics.hpp"
#include "composerie/ring.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace composerie {
namespace {

TEST(Binomial, SmallValuesAndConvention) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(-3, -3), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  auto rows = testing::pascal(64);
  EXPECT_EQ(binomial(30, 15), BigInt(155117520));
  EXPECT_EQ(rows[30][15], BigInt(155117520));
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binomial(n, k), rows[n][k]) << n << "," << k;
  }
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k <= n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST(Binomial, NoOverflowAtLargeArguments) {
  // C(200, 100) has 59 digits.
  EXPECT_EQ(binomial(200, 100).str(), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(Multichoose, StarsAndBars) {
  EXPECT_EQ(multichoose(0, 0), 1);
  EXPECT_EQ(multichoose(0, 3), 0);
  EXPECT_EQ(multichoose(3, 0), 1);
  EXPECT_EQ(multichoose(3, 3), 10);
  EXPECT_EQ(multichoose(2, -1), 0);
}

TEST(Multinomial, Examples) {
  const std::vector<std::int64_t> ones{1, 1, 1}, four{4}, twos{2, 2, 2}, bad{1, 1};
  EXPECT_EQ(multinomial(3, ones), 6);
  EXPECT_EQ(multinomial(4, four), 1);
  EXPECT_EQ(multinomial(6, twos), 90);
  EXPECT_EQ(multinomial(3, bad), 0);
}

// multinomial(k, parts) against the product of binomials for every
// composition of k <= 12 into at most 5 blocks.
TEST(Multinomial, EqualsProductOfBinomials) {
  for (int k = 0; k <= 12; ++k) {
    for (int blocks = 1; blocks <= 5; ++blocks) {
      std::vector<std::int64_t> parts(blocks, 0);
      std::function<void(int, int)> fill = [&](int j, int left) {
        if (j == blocks - 1) {
          parts[j] = left;
          BigInt expect = 1;
          std::int64_t rest = k;
          for (auto p : parts) {
            expect *= testing::pascal_binomial(unsigned(rest), unsigned(p));
            rest -= p;
          }
          ASSERT_EQ(multinomial(k, parts), expect);
          return;
        }
        for (int v = 0; v <= left; ++v) {
          parts[j] = v;
          fill(j + 1, left - v);
        }
      };
      fill(0, k);
    }
  }
}

TEST(Fibonacci, Values) {
  EXPECT_EQ(fibonacci(1), 1);
  EXPECT_EQ(fibonacci(2), 1);
  EXPECT_EQ(fibonacci(10), 55);
  BigInt a = 1, b = 1;
  for (int n = 3; n <= 90; ++n) {
    BigInt c = a + b;
    a = b;
    b = c;
    ASSERT_EQ(fibonacci(n), b);
  }
  EXPECT_THROW(fibonacci(0), std::invalid_argument);
}

TEST(RingHom, Examples) {
  EXPECT_EQ(ring_hom_mod(17, 5).value(), 2u);
  EXPECT_EQ(ring_hom_mod(0, 7).value(), 0u);
  EXPECT_EQ(ring_hom_mod(-3, 7).value(), 4u);
  EXPECT_THROW(ring_hom_mod(3, 1), std::invalid_argument);
  EXPECT_THROW(ring_hom_mod(3, 0), std::invalid_argument);
}

BigInt random_big(std::mt19937_64& rng) {
  BigInt x = rng();
  x <<= 64;
  x += rng();
  return (rng() & 1U) ? x : BigInt(-x);
}

TEST(RingHom, RespectsAdditionAndMultiplication) {
  std::mt19937_64 rng(20261016);
  for (std::uint64_t p : {2ull, 97ull, 2147483647ull, 9223372036854775783ull}) {
    for (int trial = 0; trial < 1000; ++trial) {
      BigInt x = random_big(rng), y = random_big(rng);
      ASSERT_EQ(ring_hom_mod(x + y, p), ring_hom_mod(x, p) + ring_hom_mod(y, p));
      ASSERT_EQ(ring_hom_mod(x * y, p), ring_hom_mod(x, p) * ring_hom_mod(y, p));
      ASSERT_EQ(ring_hom_mod(-x, p), -ring_hom_mod(x, p));
    }
  }
}

template <typename R>
void check_ring_laws(const R& ring, const std::vector<typename R::value_type>& sample) {
  const auto zero = ring.zero(), one = ring.one();
  for (const auto& a : sample) {
    ASSERT_EQ(one * a, a);
    ASSERT_EQ(zero * a, zero);
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a + (-a), zero);
    for (const auto& b : sample) {
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a + b, b + a);
      for (const auto& c : sample) {
        ASSERT_EQ(a + (b + c), (a + b) + c);
        ASSERT_EQ(a * (b * c), (a * b) * c);
        ASSERT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(RingLaws, Integer) {
  std::mt19937_64 rng(7);
  IntegerRing ring;
  std::vector<BigInt> sample{0, 1, -1};
  for (int i = 0; i < 20; ++i) sample.push_back(random_big(rng));
  check_ring_laws(ring, sample);
}

TEST(RingLaws, Modular) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2ull, 97ull, 2147483647ull, (1ull << 63)}) {
    ModularRing ring(p);
    std::vector<ModInt> sample{ring.zero(), ring.one(), ring.from_integer(-1)};
    for (int i = 0; i < 20; ++i) sample.push_back(ring.from_integer(random_big(rng)));
    for (const auto& v : sample) ASSERT_LT(v.value(), p);
    check_ring_laws(ring, sample);
  }
}

TEST(ModularRing, RejectsBadModulusAndMixing) {
  EXPECT_THROW(ModularRing(1), std::invalid_argument);
  EXPECT_THROW(ModularRing(0), std::invalid_argument);
  ModularRing a(7), b(11);
  EXPECT_THROW(a.one() + b.one(), std::invalid_argument);
  EXPECT_THROW(a.one() * b.one(), std::invalid_argument);
  EXPECT_EQ(a.name(), "mod:7");
  EXPECT_EQ(IntegerRing{}.name(), "int");
}

}  // namespace
}  // namespace composerie
