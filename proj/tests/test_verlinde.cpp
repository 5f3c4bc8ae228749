#include <gtest/gtest.h>

#include "trigsum/verlinde.hpp"

using namespace trigsum;

TEST(Verlinde, Examples) {
  EXPECT_EQ(dim_untwisted(2, 2), 10);
  EXPECT_EQ(dim_untwisted(3, 2), 36);
  EXPECT_EQ(dim_twisted(2, 2), 6);
  EXPECT_EQ(dim_twisted(3, 2), 28);
  EXPECT_EQ(dim_twisted(4, 2), 120);
  EXPECT_EQ(dim_untwisted(4, 1), 16);
  EXPECT_EQ(dim_twisted(5, 4), 41041);
  EXPECT_EQ(dim_untwisted(5, 0), 1);
}

TEST(Verlinde, GenusTwoIsTetrahedral) {
  for (std::int64_t k = 0; k <= 20; ++k)
    EXPECT_EQ(dim_untwisted(2, k), Rational((k + 1) * (k + 2) * (k + 3), 6)) << k;
}

TEST(Verlinde, ClosedPolynomials) {
  for (std::int64_t g = 2; g <= 4; ++g)
    for (std::int64_t k = 0; k <= 20; ++k)
      EXPECT_EQ(dim_untwisted(g, k), dim_untwisted_closed(g, k)) << g << "," << k;
  try {
    dim_untwisted_closed(5, 1);
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::unsupported_genus);
  }
}

TEST(Verlinde, PositiveIntegers) {
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t k = 1; k <= 20; ++k) {
      const Rational d = dim_untwisted(g, k);
      EXPECT_TRUE(is_integer(d) && d > 0) << g << "," << k;
      if (k % 2 == 0) {
        const Rational t = dim_twisted(g, k);
        EXPECT_TRUE(is_integer(t) && t > 0) << g << "," << k;
        EXPECT_LT(t, d);
      }
    }
}

TEST(Verlinde, LevelOneIsPowerOfTwo) {
  for (std::int64_t g = 2; g <= 10; ++g)
    EXPECT_EQ(dim_untwisted(g, 1), power_of_two(g));
}

TEST(Verlinde, TwistedRejectsOddLevel) {
  try {
    dim_twisted(3, 3);
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::parity_violation);
  }
  EXPECT_THROW(dim_twisted(3, 0), error);
  EXPECT_THROW(dim_untwisted(1, 3), error);
  EXPECT_THROW(dim_untwisted(2, -1), error);
}

TEST(Verlinde, BlockDimensionQuery) {
  EXPECT_EQ(block_dimension({3, 2, false}), 36);
  EXPECT_EQ(block_dimension({3, 2, true}), 28);
}

TEST(Verlinde, TwistedFromUntwistedUnshifted) {
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t k = 2; k <= 20; k += 2)
      EXPECT_EQ(twisted_from_untwisted(g, k, TwistConvention::Unshifted), dim_twisted(g, k)) << g << "," << k;
}

TEST(Verlinde, ShiftedConventionDisagrees) {
  int mismatches = 0;
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t k = 2; k <= 20; k += 2)
      if (twisted_from_untwisted(g, k, TwistConvention::Shifted) != dim_twisted(g, k))
        ++mismatches;
  EXPECT_GT(mismatches, 0);
}

TEST(Verlinde, GeneratingFunction) {
  const std::vector<double> angles{0.1, 0.2, 0.3, 0.4};
  for (std::int64_t k : {3, 4, 5}) {
    const GenfunReport r = genfun_check(k, 12, angles);
    EXPECT_TRUE(r.passed) << k;
    ASSERT_EQ(r.samples.size(), angles.size());
    for (const auto &s : r.samples) {
      PrecisionScope scope(Precision{256});
      EXPECT_LE(s.residual, s.tail_bound + oracle_tolerance(Precision{256}));
    }
  }
}

TEST(Verlinde, GeneratingFunctionTailShrinks) {
  const std::vector<double> angles{0.3};
  const GenfunReport short_sum = genfun_check(5, 4, angles);
  const GenfunReport long_sum = genfun_check(5, 16, angles);
  PrecisionScope scope(Precision{256});
  EXPECT_LT(long_sum.samples[0].residual, short_sum.samples[0].residual);
}

TEST(Verlinde, GeneratingFunctionErrors) {
  try {
    genfun_check(4, 6, {0.0});
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::singular_sample_point);
  }
  try {
    genfun_check(5, 6, {1.2});
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::argument_out_of_range);
  }
}
