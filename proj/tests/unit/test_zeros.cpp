#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dvp/zeros.hpp"
#include "test_support.hpp"

namespace dvp {
namespace {

TEST(Rational, ReducesAndOrders) {
  const Rational a(6, 12), b(-1, -2), c(1, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num(), 1);
  EXPECT_EQ(a.den(), 2);
  EXPECT_LT(c, a);
  EXPECT_EQ(Rational(3, -9), Rational(-1, 3));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(EnumerateZeros, ClassicalKernelAtN2) {
  const ZeroSet z = enumerate_zeros(make_params(1, 2, 2));
  ASSERT_EQ(z.entries.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) {
    EXPECT_EQ(z.entries[j].location, Rational(static_cast<std::int64_t>(j + 1), 6));
  }
  const Zero& mid = z.entries[2];
  EXPECT_EQ(mid.location, Rational(1, 2));
  EXPECT_EQ(mid.kind, ZeroKind::Coincident);
  EXPECT_EQ(mid.multiplicity, 2);
  EXPECT_EQ(mid.a, 3);
  EXPECT_EQ(mid.b, 1);
  EXPECT_EQ(z.total_multiplicity(), 6);
  EXPECT_EQ(z.double_zero_count(), 1u);
}

TEST(EnumerateZeros, ClassicalKernelAtN1) {
  const ZeroSet z = enumerate_zeros(make_params(1, 2, 1));
  ASSERT_EQ(z.entries.size(), 2u);
  EXPECT_EQ(z.entries[0].location, Rational(1, 3));
  EXPECT_EQ(z.entries[1].location, Rational(2, 3));
  for (const Zero& e : z.entries) {
    EXPECT_EQ(e.kind, ZeroKind::FirstFamily);
    EXPECT_EQ(e.multiplicity, 1);
  }
}

TEST(EnumerateZeros, BothOddGivesHalfIntegerDoubleZero) {
  const ZeroSet z = enumerate_zeros(make_params(1, 3, 1));
  // first family k/4, second family 1/2
  ASSERT_EQ(z.entries.size(), 3u);
  EXPECT_EQ(z.entries[1].location, Rational(1, 2));
  EXPECT_EQ(z.entries[1].multiplicity, 2);
  EXPECT_EQ(z.total_multiplicity(), 4);
}

TEST(EnumerateZeros, ConstantKernelHasNone) {
  const ZeroSet z = enumerate_zeros(make_params(0, 1, 1));
  EXPECT_TRUE(z.entries.empty());
  EXPECT_EQ(z.total_multiplicity(), 0);
}

TEST(EnumerateZeros, FejerZerosAreAllDouble) {
  const ZeroSet z = enumerate_zeros(make_params(0, 1, 7));
  ASSERT_EQ(z.entries.size(), 6u);
  for (const Zero& e : z.entries) EXPECT_EQ(e.multiplicity, 2);
}

// Independent census: the predicted double-zero set built from n/N and n/(2N),
// compared exactly against the enumeration.
TEST(EnumerateZeros, CensusMatchesPrediction) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const KernelParams p = testing::random_params(rng, 200);
    const ZeroSet z = enumerate_zeros(p);
    EXPECT_EQ(z.total_multiplicity(), 2 * p.sN() - 2);

    std::set<std::pair<std::int64_t, std::int64_t>> predicted;
    for (std::int64_t n = 1; n < p.N(); ++n) {
      const Rational q(n, p.N());
      predicted.emplace(q.num(), q.den());
    }
    if (p.r() % 2 == 1 && p.s() % 2 == 1) {
      for (std::int64_t n = 1; n < 2 * p.N(); ++n) {
        const Rational q(n, 2 * p.N());
        predicted.emplace(q.num(), q.den());
      }
    }
    std::set<std::pair<std::int64_t, std::int64_t>> found;
    for (std::size_t i = 0; i < z.entries.size(); ++i) {
      const Zero& e = z.entries[i];
      if (i > 0) EXPECT_LT(z.entries[i - 1].location, e.location);
      EXPECT_GT(e.location, Rational(0, 1));
      EXPECT_LT(e.location, Rational(1, 1));
      if (e.kind == ZeroKind::FirstFamily || e.kind == ZeroKind::Coincident) {
        EXPECT_EQ(e.location, Rational(e.a, p.sum_freq()));
      }
      if (e.kind == ZeroKind::SecondFamily || e.kind == ZeroKind::Coincident) {
        EXPECT_EQ(e.location, Rational(e.b, p.diff_freq()));
      }
      if (e.multiplicity == 2) found.emplace(e.location.num(), e.location.den());
    }
    // r = 0 makes the two families identical, so every zero is double.
    if (p.r() != 0) {
      EXPECT_EQ(found, predicted) << p.r() << "," << p.s() << "," << p.N();
    } else {
      EXPECT_EQ(found.size(), z.entries.size());
    }
  }
}

TEST(EnumerateZeros, KernelVanishesAtEveryEntry) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const KernelParams p = testing::random_params(rng, 60);
    for (const Zero& e : enumerate_zeros(p).entries) {
      EXPECT_NEAR(eval_vp(p, e.location.to_double()), 0.0, 1e-9);
    }
  }
}

TEST(FindZero, LooksUpExactly) {
  const ZeroSet z = enumerate_zeros(make_params(1, 2, 2));
  ASSERT_TRUE(find_zero(z, Rational(3, 6)).has_value());
  EXPECT_EQ(find_zero(z, Rational(1, 2))->multiplicity, 2);
  EXPECT_FALSE(find_zero(z, Rational(1, 4)).has_value());
}

}  // namespace
}  // namespace dvp
