#include <gtest/gtest.h>

#include "trigsum/power_sums.hpp"

using namespace trigsum;

namespace {

const Precision kBits{256};

bool close_to_oracle(const Rational &exact, const Float &oracle) {
  PrecisionScope scope(kBits);
  return abs(to_float(exact) - oracle) < oracle_tolerance(kBits);
}

} // namespace

TEST(PowerSums, SinEvenExamples) {
  EXPECT_EQ(sin_even_power_sum(4, 1), 2);
  EXPECT_EQ(sin_even_power_sum(3, 2), make_rational(9, 8));
  EXPECT_EQ(sin_even_power_sum(5, 0), 4);
}

TEST(PowerSums, SinEvenAgainstOracle) {
  for (std::int64_t N = 2; N <= 24; ++N)
    for (std::int64_t q = 0; q < N; ++q) {
      const Float o = oracle_power_sum(N, 2 * q, {Basis::Sin, false, IndexSet::AllResidues}, kBits);
      EXPECT_TRUE(close_to_oracle(sin_even_power_sum(N, q), o)) << N << "," << q;
    }
}

TEST(PowerSums, SinEvenOutsideValidity) {
  try {
    sin_even_power_sum(3, 3);
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::out_of_validity_range);
  }
  EXPECT_THROW(sin_even_power_sum(1, 0), error);
}

TEST(PowerSums, CosEvenCorrectedExample) {
  // cos^6 over n = 1, 2 at N = 3 is 2 / 64
  EXPECT_EQ(cos_even_power_sum_corrected(3, 3), make_rational(1, 32));
  EXPECT_EQ(cos_even_power_sum_corrected(4, 1), 1);
}

TEST(PowerSums, CosEvenCorrectedAgainstOracleBeyondN) {
  for (std::int64_t N = 2; N <= 16; ++N)
    for (std::int64_t J = 0; J <= 3 * N; ++J) {
      const Float o = oracle_power_sum(N, 2 * J, {Basis::Cos, false, IndexSet::AllResidues}, kBits);
      EXPECT_TRUE(close_to_oracle(cos_even_power_sum_corrected(N, J), o)) << N << "," << J;
    }
}

TEST(PowerSums, CorrectionMattersOnlyFromJEqualsN) {
  for (std::int64_t N = 2; N <= 12; ++N) {
    for (std::int64_t J = 0; J < N; ++J)
      EXPECT_EQ(cos_even_power_sum_without_correction(N, J), cos_even_power_sum_corrected(N, J));
    EXPECT_NE(cos_even_power_sum_without_correction(N, N), cos_even_power_sum_corrected(N, N));
  }
}

TEST(PowerSums, SinOddIndex) {
  EXPECT_EQ(sin_odd_index_power_sum(4, 7), make_rational(99, 256));
  for (std::int64_t N = 2; N <= 20; N += 2)
    for (std::int64_t s = 1; s <= 3 * N; ++s) {
      const Float o = oracle_power_sum(N, 2 * (s - 1), {Basis::Sin, false, IndexSet::OddIndices}, kBits,
                                       make_rational(1, 2));
      EXPECT_TRUE(close_to_oracle(sin_odd_index_power_sum(N, s), o)) << N << "," << s;
    }
  try {
    sin_odd_index_power_sum(5, 1);
    FAIL();
  } catch (const error &e) {
    EXPECT_EQ(e.code(), errc::parity_violation);
  }
}

TEST(PowerSums, CosOddIndex) {
  for (std::int64_t N = 2; N <= 16; N += 2)
    for (std::int64_t l = 0; l <= N + 1; ++l)
      for (std::int64_t j = 0; j <= N + 2; ++j) {
        const Float o = oracle_power_sum(N, 2 * j, {Basis::Cos, false, IndexSet::OddIndices}, kBits, Rational(l));
        EXPECT_TRUE(close_to_oracle(cos_odd_index_power_sum(N, j, l), o)) << N << "," << j << "," << l;
      }
}

TEST(PowerSums, EquispacedAllCases) {
  for (std::int64_t N = 2; N <= 14; ++N)
    for (std::int64_t e = 0; e <= 3 * N; ++e)
      for (bool alternating : {false, true})
        for (Basis basis : {Basis::Cos, Basis::Sin}) {
          if (basis == Basis::Sin && e % 2 != 0)
            continue;
          const Float o = oracle_power_sum(N, e, {basis, alternating, IndexSet::AllResidues}, kBits);
          EXPECT_TRUE(close_to_oracle(equispaced_power_sum(N, e, basis, alternating), o))
              << N << "," << e << "," << alternating << "," << (basis == Basis::Sin);
        }
}

TEST(PowerSums, EquispacedAgreesWithDedicatedForms) {
  for (std::int64_t N = 2; N <= 12; ++N) {
    for (std::int64_t J = 0; J <= 2 * N; ++J)
      EXPECT_EQ(equispaced_power_sum(N, 2 * J, Basis::Cos, false), cos_even_power_sum_corrected(N, J));
    for (std::int64_t q = 0; q < N; ++q)
      EXPECT_EQ(equispaced_power_sum(N, 2 * q, Basis::Sin, false), sin_even_power_sum(N, q));
  }
}

TEST(PowerSums, AlternatingParityVanishing) {
  for (std::int64_t N = 3; N <= 15; N += 2)
    for (std::int64_t q = 0; q <= 10; ++q)
      EXPECT_EQ(alternating_power_sum(N, 2 * q, {Basis::Sin, true, IndexSet::AllResidues}), 0);
  for (std::int64_t N = 2; N <= 14; N += 2)
    for (std::int64_t e = 1; e <= 21; e += 2)
      EXPECT_EQ(alternating_power_sum(N, e, {Basis::Cos, true, IndexSet::AllResidues}), 0);
  EXPECT_THROW(alternating_power_sum(4, 2, {Basis::Cos, true, IndexSet::OddIndices}), error);
}

TEST(PowerSums, OddSinPowersRejected) { EXPECT_THROW(equispaced_power_sum(5, 3, Basis::Sin, false), error); }
