#include "composerie/weights.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

namespace composerie {
namespace {

TEST(Weights, FamilyExamples) {
  EXPECT_EQ(weight_at(family_to_weights(parse_family("all-ones")), 5), 1);

  auto no2 = family_to_weights(parse_family("no-part:2"));
  EXPECT_EQ(weight_at(no2, 1), 0);
  EXPECT_EQ(weight_at(no2, 0), 1);
  EXPECT_EQ(weight_at(no2, 2), 1);

  EXPECT_EQ(weight_at(family_to_weights(parse_family("two-type-ones:1")), 0), 2);

  auto b2 = family_to_weights(parse_family("binomial:2"));
  const auto* rule = std::get_if<ExplicitPrefix>(&b2.rule());
  ASSERT_NE(rule, nullptr);
  EXPECT_EQ(rule->prefix, (std::vector<BigInt>{1, 2, 1}));
  EXPECT_EQ(rule->tail, 0);

  auto odd = family_to_weights(parse_family("residue-1-mod:2"));
  for (std::uint64_t i = 0; i < 20; ++i) EXPECT_EQ(weight_at(odd, i), i % 2 == 0 ? 1 : 0);

  auto pyr = family_to_weights(parse_family("pyramidal:2"));
  for (std::uint64_t i = 0; i < 20; ++i) EXPECT_EQ(weight_at(pyr, i), i + 1);
}

TEST(Weights, BoundedIndexConvention) {
  // bounded:m keeps indices 0..m, i.e. parts 1..m+1.
  auto b = family_to_weights(parse_family("bounded:2"));
  EXPECT_EQ(weight_at(b, 2), 1);
  EXPECT_EQ(weight_at(b, 3), 0);
}

const char* const kSpecs[] = {"all-ones",        "bounded:3",       "allowed-set:1,4,2", "one-or-m:3",
                              "residue-1-mod:3", "residue-1-mod:1", "no-part:2",         "no-part:5",
                              "two-type-ones:0", "two-type-ones:3", "binomial:4",        "pyramidal:1",
                              "pyramidal:3",     "squares",         "explicit:2,-1,5;tail=3"};

TEST(Weights, AgreesWithDirectLaw) {
  for (const char* spec : kSpecs) {
    const auto f = parse_family(spec);
    const auto r = family_to_weights(f);
    const auto law = testing::direct_law(f);
    for (std::uint64_t i = 0; i <= 32; ++i) ASSERT_EQ(weight_at(r, i), law(i)) << spec << " i=" << i;
  }
}

TEST(Weights, AllowedSetIsIndicatorOfParts) {
  const auto f = parse_family("allowed-set:1,3,5,8");
  const auto r = family_to_weights(f);
  for (std::uint64_t i = 0; i <= 32; ++i) {
    const bool allowed = i + 1 == 1 || i + 1 == 3 || i + 1 == 5 || i + 1 == 8;
    ASSERT_EQ(weight_at(r, i), allowed ? 1 : 0);
  }
}

TEST(Weights, Deterministic) {
  for (const char* spec : kSpecs) {
    auto a = family_to_weights(parse_family(spec));
    auto b = family_to_weights(parse_family(spec));
    for (std::uint64_t i = 0; i <= 64; ++i) ASSERT_EQ(weight_at(a, i), weight_at(b, i));
  }
}

TEST(FamilyText, RoundTrips) {
  for (const char* spec : kSpecs) {
    const auto f = parse_family(spec);
    EXPECT_EQ(parse_family(to_string(f)), f) << spec;
  }
  EXPECT_EQ(to_string(parse_family("explicit:2,1,1")), "explicit:2,1,1;tail=0");
  EXPECT_EQ(to_string(parse_family("no-part:2")), "no-part:2");
}

TEST(FamilyText, RejectsInvalid) {
  for (const char* bad : {"", "nope", "no-part", "no-part:1", "no-part:x", "one-or-m:1", "allowed-set:2,3",
                          "allowed-set:1,3,3", "allowed-set:", "binomial:0", "residue-1-mod:0", "squares:2",
                          "explicit:", "explicit:1,2;tail", "explicit:1,a", "pyramidal:-1", "bounded:0"}) {
    EXPECT_THROW(parse_family(bad), FamilyError) << bad;
  }
}

TEST(FamilyText, ErrorNamesConstraint) {
  try {
    parse_family("allowed-set:2,3");
    FAIL();
  } catch (const FamilyError& e) {
    EXPECT_NE(std::string(e.what()).find("must contain 1"), std::string::npos);
  }
}

}  // namespace
}  // namespace composerie
