#pragma once

// Trigonometric power sums over equally spaced angles: the Schwatt-type
// closed forms, their multiple-of-N corrections, and a direct-summation
// oracle.

#include <cstdint>
#include <string>

#include "trigsum/bigfloat.hpp"
#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/laurent.hpp"

namespace trigsum {

enum class Basis { Cos, Sin };

enum class IndexSet {
  AllResidues, ///< n = 1 .. N-1, angle n * theta
  OddIndices,  ///< n = 1 .. N/2, angle (2n-1) * theta
};

struct PowerSumKind {
  Basis basis = Basis::Cos;
  bool alternating = false;
  IndexSet index_set = IndexSet::AllResidues;
};

namespace detail {

inline void require_modulus(std::int64_t N) {
  require(N >= 2, errc::argument_out_of_range, "N must be at least 2, got " + std::to_string(N));
}

} // namespace detail

/// sum_{n=1}^{N-1} sin^{2q}(n pi / N), Schwatt's closed form; valid for q < N.
inline Rational sin_even_power_sum(std::int64_t N, std::int64_t q) {
  detail::require_modulus(N);
  require(q >= 0, errc::argument_out_of_range, "negative exponent");
  if (q >= N)
    fail(errc::out_of_validity_range,
         "Schwatt sin power formula needs q < N (q=" + std::to_string(q) + ", N=" + std::to_string(N) + ")");
  Rational alternating_part = 0;
  for (std::int64_t t = 1; t <= q; ++t)
    alternating_part += sign_power(t + 1) * binomial(2 * q, q - t);
  return power_of_two(-(2 * q - 1)) * alternating_part +
         Rational(N - 1) * power_of_two(-2 * q) * binomial(2 * q, q);
}

/// sum_{n=1}^{N-1} cos^{2J}(n pi / N) including the binomial corrections for
/// J >= N; exact for every J.
inline Rational cos_even_power_sum_corrected(std::int64_t N, std::int64_t J) {
  detail::require_modulus(N);
  require(J >= 0, errc::argument_out_of_range, "negative exponent");
  Rational correction = 0;
  for (std::int64_t p = 1; p * N <= J; ++p)
    correction += binomial(2 * J, J - p * N);
  return Rational(-1) + Rational(N) * power_of_two(-(2 * J - 1)) * correction +
         Rational(N) * power_of_two(-2 * J) * binomial(2 * J, J);
}

/// The same sum with the p-correction dropped; agrees with the true sum only for J < N.
inline Rational cos_even_power_sum_without_correction(std::int64_t N, std::int64_t J) {
  detail::require_modulus(N);
  require(J >= 0, errc::argument_out_of_range, "negative exponent");
  return Rational(-1) + Rational(N) * power_of_two(-2 * J) * binomial(2 * J, J);
}

/// sum_{n=1}^{N/2} sin^{2(s-1)}((2n-1) pi / 2N) for even N.
///
/// Equals 2N / 2^{2s} C(2(s-1), s-1) for s <= N; the alternating terms
/// C(2q, q - pN) only enter beyond that.
inline Rational sin_odd_index_power_sum(std::int64_t N, std::int64_t s) {
  detail::require_modulus(N);
  require(N % 2 == 0, errc::parity_violation, "odd-index sin power sum needs even N");
  require(s >= 1, errc::argument_out_of_range, "s must be positive");
  const std::int64_t q = s - 1;
  Rational correction = 0;
  for (std::int64_t p = 1; p * N <= q; ++p)
    correction += sign_power(p) * binomial(2 * q, q - p * N);
  return Rational(2 * N) * power_of_two(-2 * s) * (binomial(2 * q, q) + 2 * correction);
}

/// sum_{n=1}^{N/2} cos^{2j}((2n-1) l pi / N) for even N and any integer l.
///
/// Roots-of-unity filter: only frequencies d with 2 d l = 0 (mod N) survive,
/// each with sign (-1)^{2dl/N}.
inline Rational cos_odd_index_power_sum(std::int64_t N, std::int64_t j, std::int64_t l) {
  detail::require_modulus(N);
  require(N % 2 == 0, errc::parity_violation, "odd-index cos power sum needs even N");
  require(j >= 0, errc::argument_out_of_range, "negative exponent");
  Rational acc = 0;
  for (std::int64_t d = -j; d <= j; ++d) {
    const std::int64_t turns = 2 * d * l;
    if (turns % N != 0)
      continue;
    acc += sign_power(turns / N) * binomial(2 * j, j - d);
  }
  return Rational(N) * power_of_two(-(2 * j + 1)) * acc;
}

/// sum_{n=1}^{N-1} sigma^n f^e(n pi / N) with f in {cos, sin} and
/// sigma = -1 when alternating, +1 otherwise. Exact for every case with a
/// rational value (sin needs even e).
inline Rational equispaced_power_sum(std::int64_t N, std::int64_t e, Basis basis, bool alternating) {
  detail::require_modulus(N);
  require(e >= 0, errc::argument_out_of_range, "negative exponent");
  if (basis == Basis::Sin)
    require(e % 2 == 0, errc::argument_out_of_range, "odd powers of sin do not sum to rationals");
  const std::int64_t shift = alternating ? N : 0;
  // The n -> N-n reflection pairs terms of opposite sign.
  if ((e + shift) % 2 != 0)
    return 0;
  Rational filtered = 0;
  for (std::int64_t k = 0; k <= e; ++k) {
    if ((e - 2 * k + shift) % (2 * N) != 0)
      continue;
    Rational term = binomial(e, k);
    if (basis == Basis::Sin)
      term *= sign_power(k);
    filtered += term;
  }
  if (basis == Basis::Sin)
    filtered *= sign_power(e / 2);
  const Rational first_term = (basis == Basis::Cos || e == 0) ? Rational(1) : Rational(0);
  return Rational(N) * power_of_two(-e) * filtered - first_term;
}

/// sum_{n=1}^{N-1} (-1)^n f^e(n pi / N).
///
/// Vanishes when e + N is odd (even sin powers with N odd, odd cos powers
/// with N even); otherwise carries the multiple-of-N corrections.
inline Rational alternating_power_sum(std::int64_t N, std::int64_t exponent, PowerSumKind kind) {
  require(kind.index_set == IndexSet::AllResidues, errc::argument_out_of_range,
          "alternating sums are defined over n = 1..N-1");
  return equispaced_power_sum(N, exponent, kind.basis, true);
}

/// Direct summation of the power sum described by `kind`.
///
/// Angles are n * a * pi / N (AllResidues) or (2n-1) * a * pi / N
/// (OddIndices) with a = angle_multiplier; the alternating factor is (-1)^n.
/// Each of the at most N terms is within a few ulps, so the error is below
/// N * 2^(4 - bits) * (largest term).
inline Float oracle_power_sum(std::int64_t N, std::int64_t exponent, PowerSumKind kind,
                              Precision precision, const Rational &angle_multiplier = 1) {
  detail::require_modulus(N);
  require(exponent >= 0, errc::argument_out_of_range, "negative exponent");
  PrecisionScope scope(Precision::of(precision.bits));
  const Float step = float_pi() * to_float(angle_multiplier) / N;
  const std::int64_t count = kind.index_set == IndexSet::AllResidues ? N - 1 : N / 2;
  Float acc = 0;
  for (std::int64_t n = 1; n <= count; ++n) {
    const std::int64_t index = kind.index_set == IndexSet::AllResidues ? n : 2 * n - 1;
    const Float angle = step * index;
    Float base = kind.basis == Basis::Cos ? Float(cos(angle)) : Float(sin(angle));
    Float term = boost::multiprecision::pow(base, static_cast<int>(exponent));
    if (kind.alternating && n % 2 != 0)
      term = -term;
    acc += term;
  }
  return acc;
}

} // namespace trigsum
