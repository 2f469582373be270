#include <gtest/gtest.h>

#include <set>

#include "bicirc/field.hpp"
#include "bicirc/projective.hpp"

using namespace bicirc;

TEST(Field, PrimeFieldIsIntegersModP) {
  const auto f = make_field(5);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      EXPECT_EQ(f.add(a, b), (a + b) % 5);
      EXPECT_EQ(f.mul(a, b), (a * b) % 5);
    }
}

TEST(Field, GF4UsesXSquaredPlusXPlusOne) {
  const auto f = make_field(4);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  // x has multiplicative order 3.
  const std::uint32_t x = 2;
  EXPECT_NE(f.mul(x, x), 1u);
  EXPECT_EQ(f.mul(f.mul(x, x), x), 1u);
}

TEST(Field, RejectsNonPrimePowers) {
  EXPECT_THROW(make_field(6), std::invalid_argument);
  EXPECT_THROW(make_field(1), std::invalid_argument);
  EXPECT_THROW(make_field(2048), std::invalid_argument);
  EXPECT_EQ(prime_power_decomposition(81), std::make_pair(3u, 4u));
  EXPECT_EQ(prime_power_decomposition(12), std::make_pair(0u, 0u));
}

// Exhaustive field axioms, and a cyclic multiplicative group.
TEST(FieldProperty, AxiomsHold) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    const auto f = make_field(q);
    ASSERT_EQ(f.q(), q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        if (a && b) EXPECT_NE(f.mul(a, b), 0u);
        for (std::uint32_t c = 0; c < q; c += 1 + q / 6) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        }
      }
    }
    bool has_generator = false;
    for (std::uint32_t g = 1; g < q && !has_generator; ++g) {
      std::set<std::uint32_t> powers;
      std::uint32_t x = 1;
      for (std::uint32_t i = 0; i + 1 < q; ++i) {
        powers.insert(x);
        x = f.mul(x, g);
      }
      has_generator = powers.size() == q - 1;
    }
    EXPECT_TRUE(has_generator) << q;
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(Projective, PlaneCounts) {
  for (auto [q, points] : {std::pair{2u, 7u}, {3u, 13u}, {4u, 21u}}) {
    const auto pg = projective_incidence(3, q);
    ASSERT_EQ(pg.point_count(), points);
    for (std::size_t h = 0; h < points; ++h) {
      std::size_t on = 0;
      for (std::size_t p = 0; p < points; ++p) on += pg.incident(p, h);
      EXPECT_EQ(on, q + 1);
    }
  }
}

// Two distinct points lie on exactly one line; points are distinct and normalized.
TEST(ProjectiveProperty, PlaneAxioms) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto pg = projective_incidence(3, q);
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::size_t i = 0; i < pg.point_count(); ++i) {
      const auto& v = pg.point(i);
      distinct.insert(v);
      const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
      ASSERT_NE(lead, v.end());
      EXPECT_EQ(*lead, 1u);
    }
    EXPECT_EQ(distinct.size(), pg.point_count());
    for (std::size_t a = 0; a < pg.point_count(); ++a)
      for (std::size_t b = a + 1; b < pg.point_count(); ++b) {
        std::size_t common = 0;
        for (std::size_t h = 0; h < pg.point_count(); ++h) common += pg.incident(a, h) && pg.incident(b, h);
        EXPECT_EQ(common, 1u);
      }
  }
}

TEST(Projective, HigherDimensionCounts) {
  const auto pg = projective_incidence(4, 2);
  EXPECT_EQ(pg.point_count(), 15u);
  std::size_t on = 0;
  for (std::size_t p = 0; p < 15; ++p) on += pg.incident(p, 0);
  EXPECT_EQ(on, 7u);
  EXPECT_THROW(projective_incidence(2, 3), std::invalid_argument);
}
