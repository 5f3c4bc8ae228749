#include <gtest/gtest.h>

#include "trigsum/derivations.hpp"

using namespace trigsum;

TEST(Residues, CycleClosedForms) {
  for (std::int64_t l = 1; l <= 12; ++l) {
    EXPECT_EQ(cycle_first_residue(l), sign_power(l) * Rational(l * (l - 1), 2)) << l;
    EXPECT_EQ(cycle_second_residue(l), sign_power(l + 1) * Rational(l)) << l;
  }
}

TEST(Residues, CycleThroughChebyshev) {
  for (std::int64_t N = 2; N <= 14; ++N)
    for (std::int64_t l = 1; l <= N; ++l) {
      EXPECT_EQ(cycle_first_term_by_chebyshev(N, l), Rational(-l * (l - 1), N)) << N << "," << l;
      EXPECT_EQ(cycle_resistance_by_residue(N, l), cycle_resistance(N, l)) << N << "," << l;
    }
  EXPECT_EQ(cycle_resistance_by_residue(7, 0), 0);
}

TEST(Residues, InverseBinomialAgainstBinomial) {
  // res 1/((1+w)^p w^q) = (-1)^(q-1) C(p+q-2, q-1)
  for (unsigned p = 1; p <= 8; ++p)
    for (std::int64_t q = -2; q <= 12; ++q) {
      const Rational expected = q >= 1 ? sign_power(q - 1) * binomial(p + q - 2, q - 1) : Rational(0);
      EXPECT_EQ(inverse_binomial_residue(p, q), expected) << p << "," << q;
    }
}

TEST(Residues, T4Parts) {
  for (std::int64_t l = 0; l <= 14; ++l) {
    EXPECT_EQ(t4_quartic_residue(l), Rational((l + 1) * l * (l - 1) * (l - 2), 24)) << l;
    EXPECT_EQ(t4_cubic_residue(l), Rational(-(l + 1) * l * (l - 1), 6)) << l;
  }
  for (std::int64_t N = 2; N <= 16; ++N)
    for (std::int64_t l = 0; l <= N; ++l)
      EXPECT_EQ(t4_by_residue(N, l), t4_sum(N, l)) << N << "," << l;
}

TEST(Residues, TmlTail) {
  for (std::int64_t N = 2; N <= 12; ++N)
    for (std::int64_t m = 1; m <= 5; ++m)
      for (std::int64_t l = 0; l <= N; ++l)
        EXPECT_EQ(t_ml_by_residue(N, l, m), t_ml_sum(N, l, m)) << N << "," << l << "," << m;
}

TEST(Residues, S1AndS2) {
  for (std::int64_t N = 2; N <= 16; ++N)
    for (std::int64_t arg = 1; arg < N; ++arg) {
      EXPECT_EQ(s1_by_residue(N, arg), s1_sum(N, arg)) << N << "," << arg;
      EXPECT_EQ(s2_by_residue(N, arg), s2_sum(N, arg)) << N << "," << arg;
    }
}

TEST(Residues, ChebyshevProductClosure) {
  for (std::int64_t l = 1; l <= 10; ++l) {
    const std::int64_t window = 4 * l + 8;
    const LaurentSeries u = chebyshev_eval_at_node(ChebyshevKind::Second, 2 * l - 2);
    const LaurentSeries u2 = chebyshev_at_node(ChebyshevKind::Second, 2 * l - 2, 2);
    EXPECT_TRUE(agree_on_common_window((u * u2).truncated(window), chebyshev_product_closed(l, window))) << l;
  }
}

TEST(Residues, F1Route) {
  for (std::int64_t N = 3; N <= 17; N += 2)
    for (std::int64_t arg = 1; arg < N; ++arg)
      EXPECT_EQ(f1_by_residue(N, arg), f1_sum(N, arg)) << N << "," << arg;
}

TEST(Residues, F1PartsAddUp) {
  for (std::int64_t N = 3; N <= 17; N += 2)
    for (std::int64_t arg = 1; arg < N; arg += 2) {
      const F1Parts parts = f1_parts_by_residue(N, arg);
      EXPECT_EQ(parts.total(), f1_sum(N, arg)) << N << "," << arg;
    }
  EXPECT_EQ(f1_parts_by_residue(9, 1).correction, 0);
  EXPECT_NE(f1_parts_by_residue(9, 7).correction, 0);
}

TEST(Residues, F2Route) {
  for (std::int64_t N = 3; N <= 17; N += 2)
    for (std::int64_t arg = 1; arg < N; ++arg)
      EXPECT_EQ(f2_by_residue(N, arg), f2_sum(N, arg)) << N << "," << arg;
}

TEST(Residues, RoutesRejectBadParity) {
  EXPECT_THROW(f1_by_residue(6, 1), error);
  EXPECT_THROW(f2_by_residue(6, 2), error);
  EXPECT_THROW(s1_by_residue(6, 6), error);
}
