#include <gtest/gtest.h>

#include <random>

#include "bicirc/error.hpp"
#include "bicirc/permutation.hpp"
#include "oracles.hpp"

using namespace bicirc;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> cycles) { return Permutation::from_cycles(n, cycles); }

}  // namespace

TEST(Permutation, CompositionAppliesLeftFactorFirst) {
  const auto p = cyc(3, {{0, 1}});
  const auto q = cyc(3, {{1, 2}});
  // (p*q)(0) = q(p(0)) = q(1) = 2
  EXPECT_EQ((p * q)[0], 2u);
  EXPECT_EQ((q * p)[0], 1u);
}

TEST(Permutation, CycleTypeExamples) {
  EXPECT_EQ(Permutation(5).cycle_type(), CycleType({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyc(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}).cycle_type(), CycleType({5, 5}));
  EXPECT_EQ(cyc(6, {{0, 1}, {2, 3, 4}}).cycle_type().to_string(), "{3,2,1}");
}

TEST(Permutation, ParseAndPrintRoundTrip) {
  const auto p = Permutation::parse("(0 3 2)(1,4)", 6);
  EXPECT_EQ(p[0], 3u);
  EXPECT_EQ(p[2], 0u);
  EXPECT_EQ(p[4], 1u);
  EXPECT_EQ(p[5], 5u);
  EXPECT_EQ(Permutation::parse(p.to_string(), 6), p);
  EXPECT_EQ(Permutation(4).to_string(), "()");
}

TEST(Permutation, ParseRejectsBadInput) {
  EXPECT_THROW(Permutation::parse("(0 1", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(0 5)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("(0 1)(1 2)", 3), ParseError);
  EXPECT_THROW(Permutation::parse("", 3), ParseError);
  EXPECT_THROW(Permutation::parse("0 1", 3), ParseError);
}

TEST(Permutation, RejectsNonBijection) {
  const std::vector<std::uint32_t> bad = {0, 0, 1};
  EXPECT_THROW(Permutation{std::span<const std::uint32_t>(bad)}, std::invalid_argument);
  EXPECT_THROW(Permutation(kMaxDegree + 1), std::invalid_argument);
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  EXPECT_EQ(cyc(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}}).order(), 12);
  EXPECT_EQ(Permutation(3).order(), 1);
}

TEST(PermutationProperty, GroupLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto a = oracle::random_permutation(n, rng);
    const auto b = oracle::random_permutation(n, rng);
    const auto c = oracle::random_permutation(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(a.conjugate_by(b), b.inverse() * a * b);
    EXPECT_EQ(a.conjugate_by(b).cycle_type(), a.cycle_type());
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(a.cycle_type().degree(), n);
  }
}
