#pragma once

// Exact closed forms for the named trigonometric sums, the T-recursions, and
// the direct-summation oracle for each family.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/laurent.hpp"
#include "trigsum/power_sums.hpp"

namespace trigsum {

enum class SumFamily {
  CycleR,     ///< (1/N) sum sin^2(nl pi/N) / sin^2(n pi/N)
  PathF,      ///< (1/N) sum (1 - cos(nl pi/N)) / (1 - cos(n pi/N))
  ScottCos,   ///< sum_{n=1}^{N} cos((2n-1) l pi/N) / (1 - cos((2n-1) pi/N))
  InvSin2,    ///< sum 1 / sin^2(n pi/N)
  OddInvSin2, ///< sum_{n=1}^{N} 1 / (1 - cos((2n-1) pi/N))
  T4l,        ///< sum sin^2(nl pi/N) / sin^4(n pi/N)
  Tml,        ///< sum sin^2(nl pi/N) / sin^{2m}(n pi/N)
  Tm,         ///< sum 1 / sin^{2m}(n pi/N)
  TmlTwisted, ///< sum (-1)^{n+1} sin^2(nl pi/N) / sin^{2m}(n pi/N)
  TmTwisted,  ///< sum (-1)^{n+1} / sin^{2m}(n pi/N)
  Sl,         ///< sum (-1)^n sin^2(nl pi/N) / sin^2(n pi/N)
  S1,         ///< sum sin(nl pi/N) / sin(n pi/N)
  S2,         ///< sum (-1)^n sin(nl pi/N) / sin(n pi/N)
  F1,         ///< sum [sin(nl pi/N)/sin(n pi/N)] [sin(2nl pi/N)/sin(2n pi/N)]
  F2,         ///< the same with (-1)^n
};

inline constexpr std::array<SumFamily, 15> all_families{
    SumFamily::CycleR, SumFamily::PathF, SumFamily::ScottCos,   SumFamily::InvSin2,
    SumFamily::OddInvSin2, SumFamily::T4l, SumFamily::Tml,      SumFamily::Tm,
    SumFamily::TmlTwisted, SumFamily::TmTwisted, SumFamily::Sl, SumFamily::S1,
    SumFamily::S2,     SumFamily::F1,    SumFamily::F2};

/// Command-line spelling of a family ("cycle-r", "tm-twisted", ...).
constexpr std::string_view family_name(SumFamily f) noexcept {
  switch (f) {
  case SumFamily::CycleR: return "cycle-r";
  case SumFamily::PathF: return "path-f";
  case SumFamily::ScottCos: return "scott-cos";
  case SumFamily::InvSin2: return "inv-sin2";
  case SumFamily::OddInvSin2: return "odd-inv-sin2";
  case SumFamily::T4l: return "t4l";
  case SumFamily::Tml: return "tml";
  case SumFamily::Tm: return "tm";
  case SumFamily::TmlTwisted: return "tml-twisted";
  case SumFamily::TmTwisted: return "tm-twisted";
  case SumFamily::Sl: return "s";
  case SumFamily::S1: return "s1";
  case SumFamily::S2: return "s2";
  case SumFamily::F1: return "f1";
  case SumFamily::F2: return "f2";
  }
  return "?";
}

inline std::optional<SumFamily> parse_family(std::string_view name) {
  for (SumFamily f : all_families)
    if (family_name(f) == name)
      return f;
  return std::nullopt;
}

constexpr bool uses_l(SumFamily f) noexcept {
  return f != SumFamily::InvSin2 && f != SumFamily::OddInvSin2 && f != SumFamily::Tm &&
         f != SumFamily::TmTwisted;
}
constexpr bool uses_m(SumFamily f) noexcept {
  return f == SumFamily::Tml || f == SumFamily::Tm || f == SumFamily::TmlTwisted ||
         f == SumFamily::TmTwisted;
}

/// A sum family with its parameters. `l` is the integer multiplying n pi/N
/// inside the numerator (for F1/F2 the actual argument, not a reindexed one);
/// `m` is the power for the T families. Unused parameters are ignored.
struct SumSpec {
  SumFamily family = SumFamily::CycleR;
  std::int64_t N = 2;
  std::int64_t l = 0;
  std::int64_t m = 0;

  friend bool operator==(const SumSpec &, const SumSpec &) = default;
};

struct Admissibility {
  bool admissible = true;
  std::optional<errc> violation;
  std::string reason;
  bool n_even = false;
  bool l_even = false;
  /// For Tml: l >= m, where the closed tail of the recursion is a genuine
  /// factorial ratio. Outside it the tail is exactly zero.
  bool within_recursion_domain = true;
};

namespace detail {

inline void require_l_range(std::int64_t l, std::int64_t lo, std::int64_t hi) {
  require(l >= lo && l <= hi, errc::argument_out_of_range,
          "l=" + std::to_string(l) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

/// a (a+1) ... b, or 1 when the range is empty.
inline Rational rising_product(std::int64_t a, std::int64_t b) {
  BigInt p = 1;
  for (std::int64_t x = a; x <= b; ++x)
    p *= x;
  return Rational(p);
}

inline Rational factorial(std::int64_t n) { return rising_product(1, n); }

/// l/(l+s) * C(l+s, l-s): the coefficient of 2^{2s} sin^{2s}(x) in
/// (-1)^{s+1} 2 sin^2(l x).
inline Rational multiple_angle_coefficient(std::int64_t l, std::int64_t s) {
  if (l == 0)
    return 0;
  return Rational(l) / (l + s) * binomial(l + s, l - s);
}

} // namespace detail

/// Two-point resistance of the N-cycle at distance l: l (N - l) / N.
inline Rational cycle_resistance(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  return Rational(l * (N - l), N);
}

/// Path-graph Green's function sum: l - (l^2/2 + (1 - (-1)^l)/4) / N.
inline Rational path_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  return Rational(l) - (Rational(l * l, 2) + Rational(l % 2 == 0 ? 0 : 1, 2)) / N;
}

/// Minc's sum: N^2/2 - N l.
inline Rational scott_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 1, N);
  return Rational(N * N, 2) - Rational(N * l);
}

/// sum_{n=1}^{N} (1 - cos((2n-1) l pi/N)) / (1 - cos((2n-1) pi/N)) = N l.
inline Rational scott_shift_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 1, N);
  return Rational(N * l);
}

/// sum_{n=1}^{N} 1 / (1 - cos((2n-1) pi/N)) = N^2 / 2.
inline Rational odd_inv_sin2_sum(std::int64_t N) {
  detail::require_modulus(N);
  return Rational(N * N, 2);
}

/// sum_{n=1}^{N-1} 1 / sin^2(n pi/N) = (N^2 - 1) / 3.
inline Rational inv_sin2_sum(std::int64_t N) {
  detail::require_modulus(N);
  return Rational(N * N - 1, 3);
}

/// T_4(l) = l^2 (N^2-1)/3 + (l+1)l(l-1)(l-2)/3 - 2(N-1)(l+1)l(l-1)/3,
/// which simplifies to l^2 (N-l)^2 / 3 + 2 l (N-l) / 3.
inline Rational t4_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  const Rational L(l);
  return L * L * Rational(N * N - 1) / 3 + (L + 1) * L * (L - 1) * (L - 2) / 3 -
         Rational(2 * (N - 1)) * (L + 1) * L * (L - 1) / 3;
}

/// T_{2k} = sum 1/sin^{2k}(n pi/N) for k = 0..m, by the recursion in k
/// (T_0 = N - 1).
inline std::vector<Rational> t_m_sequence(std::int64_t N, std::int64_t m) {
  detail::require_modulus(N);
  require(m >= 0, errc::argument_out_of_range, "m must be non-negative");
  std::vector<Rational> T(static_cast<std::size_t>(m) + 1);
  T[0] = Rational(N - 1);
  // sum_{l=1}^{N-1} l/(l+s) C(l+s, l-s), shared by every level of the recursion.
  std::vector<Rational> coefficient_sums(static_cast<std::size_t>(m) + 1);
  for (std::int64_t s = 1; s < m; ++s)
    for (std::int64_t l = 1; l < N; ++l)
      coefficient_sums[static_cast<std::size_t>(s)] += detail::multiple_angle_coefficient(l, s);
  for (std::int64_t k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (std::int64_t s = 1; s < k; ++s)
      acc += sign_power(s + 1) * coefficient_sums[static_cast<std::size_t>(s)] * power_of_two(2 * s) *
             T[static_cast<std::size_t>(k - s)];
    acc /= N;
    const Rational tail = sign_power(k + 1) * power_of_two(2 * k - 1) *
                          detail::rising_product(N - k, N + k - 1) /
                          (Rational(N) * detail::factorial(2 * k + 1)) * Rational(2 * k * N + 1 - N);
    T[static_cast<std::size_t>(k)] = acc + tail;
  }
  return T;
}

/// T_{2m} = sum_{n=1}^{N-1} 1 / sin^{2m}(n pi/N).
inline Rational t_m_sum(std::int64_t N, std::int64_t m) {
  require(m >= 1, errc::argument_out_of_range, "m must be at least 1");
  return t_m_sequence(N, m).back();
}

/// T_{2m}(l) = sum sin^2(nl pi/N) / sin^{2m}(n pi/N) via the recursion over
/// T_{2(m-s)} plus the closed tail
/// (-1)^{m+1} 2^{2m-1} (l+m-1)!/((l-m)!(2m)!) (mN - l).
inline Rational t_ml_sum(std::int64_t N, std::int64_t l, std::int64_t m) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  require(m >= 1, errc::argument_out_of_range, "m must be at least 1");
  const auto T = t_m_sequence(N, m - 1);
  Rational acc = 0;
  for (std::int64_t s = 1; s < m; ++s)
    acc += sign_power(s + 1) * detail::multiple_angle_coefficient(l, s) * power_of_two(2 * s) *
           T[static_cast<std::size_t>(m - s)];
  acc /= 2;
  // (l+m-1)!/(l-m)! as a rising product vanishes for 0 <= l < m.
  const Rational tail = sign_power(m + 1) * power_of_two(2 * m - 1) *
                        detail::rising_product(l - m + 1, l + m - 1) / detail::factorial(2 * m) *
                        Rational(m * N - l);
  return acc + tail;
}

namespace detail {

inline void require_even_modulus(std::int64_t N, std::string_view what) {
  require_modulus(N);
  if (N % 2 != 0)
    fail(errc::parity_violation, std::string(what) + " is non-vanishing only for even N, got N=" +
                                     std::to_string(N));
}

/// Closed tail of the twisted recursion:
/// (-1)^{m+1} 2^{2m-1} (l+m-1)!/((l-m)!(2m)!) l, valid while l - m < N/2.
inline Rational twisted_closed_tail(std::int64_t l, std::int64_t m) {
  return sign_power(m + 1) * power_of_two(2 * m - 1) * rising_product(l - m + 1, l + m - 1) /
         factorial(2 * m) * Rational(l);
}

} // namespace detail

/// T^t_{2k} = sum (-1)^{n+1} / sin^{2k}(n pi/N) for k = 0..m, N even, by the
/// recursion obtained at l = N/2 (T^t_0 = 1).
inline std::vector<Rational> t_m_twisted_sequence(std::int64_t N, std::int64_t m) {
  detail::require_even_modulus(N, "the twisted sum");
  require(m >= 0, errc::argument_out_of_range, "m must be non-negative");
  const auto T = t_m_sequence(N, m);
  const std::int64_t h = N / 2;
  std::vector<Rational> Tt(static_cast<std::size_t>(m) + 1);
  Tt[0] = 1;
  for (std::int64_t k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (std::int64_t s = 1; s < k; ++s)
      acc += sign_power(s + 1) * detail::multiple_angle_coefficient(h, s) * power_of_two(2 * s) *
             Tt[static_cast<std::size_t>(k - s)];
    acc += 2 * detail::twisted_closed_tail(h, k);
    Tt[static_cast<std::size_t>(k)] = acc - T[static_cast<std::size_t>(k)];
  }
  return Tt;
}

inline Rational t_m_twisted(std::int64_t N, std::int64_t m) {
  require(m >= 1, errc::argument_out_of_range, "m must be at least 1");
  return t_m_twisted_sequence(N, m).back();
}

/// T^t_{2m}(l) = sum (-1)^{n+1} sin^2(nl pi/N) / sin^{2m}(n pi/N), N even.
///
/// Uses the closed tail while l - m < N/2. Beyond that the alternating sin
/// power sums in the tail pick up multiple-of-N terms, so the tail is summed
/// term by term with the corrected power sums.
inline Rational t_ml_twisted(std::int64_t N, std::int64_t l, std::int64_t m) {
  detail::require_even_modulus(N, "the twisted sum");
  detail::require_l_range(l, 0, N);
  require(m >= 1, errc::argument_out_of_range, "m must be at least 1");
  const auto Tt = t_m_twisted_sequence(N, m - 1);
  Rational acc = 0;
  for (std::int64_t s = 1; s < m; ++s)
    acc += sign_power(s + 1) * detail::multiple_angle_coefficient(l, s) * power_of_two(2 * s) *
           Tt[static_cast<std::size_t>(m - s)];
  acc /= 2;
  if (l - m < N / 2)
    return acc + detail::twisted_closed_tail(l, m);
  Rational tail = 0;
  for (std::int64_t s = m; s <= l; ++s) {
    // sum (-1)^{n+1} sin^{2(s-m)}(n pi/N)
    const Rational twisted_power = -equispaced_power_sum(N, 2 * (s - m), Basis::Sin, true);
    tail += sign_power(s + 1) * detail::multiple_angle_coefficient(l, s) * power_of_two(2 * s) * twisted_power;
  }
  return acc + tail / 2;
}

/// S(l) = sum (-1)^n sin^2(nl pi/N)/sin^2(n pi/N) = -min(l, N-l)^2 for even N.
inline Rational s_sum(std::int64_t N, std::int64_t l) {
  detail::require_even_modulus(N, "S(l)");
  detail::require_l_range(l, 0, N);
  const std::int64_t c = std::min(l, N - l);
  return Rational(-c * c);
}

/// S_1(l) = N - l for odd l, 0 for even l.
inline Rational s1_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 1, N - 1);
  return l % 2 != 0 ? Rational(N - l) : Rational(0);
}

/// S_2(l) = -l when l and N have opposite parity, 0 otherwise.
inline Rational s2_sum(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 1, N - 1);
  return (l + N) % 2 != 0 ? Rational(-l) : Rational(0);
}

/// F_1(N, arg, 2) for odd N. Odd arguments are reindexed as arg = 2l - 1.
inline Rational f1_sum(std::int64_t N, std::int64_t arg) {
  require(N >= 3 && N % 2 != 0, errc::parity_violation,
          "F1 is defined here for odd N >= 3, got N=" + std::to_string(N));
  detail::require_l_range(arg, 1, N - 1);
  if (arg % 2 == 0)
    return 0;
  const std::int64_t l = (arg + 1) / 2;
  const Rational parity_l = (l % 2 == 0) ? 0 : 1; // (1 - (-1)^l) / 2
  Rational value = -Rational((3 * l - 2) * (3 * l - 3), 2) + Rational((l - 1) * (l - 2), 2) - l + parity_l +
                   Rational((N - 1) * (2 * l - 1 - (l % 2 == 0 ? 1 : -1)), 2);
  if (3 * l - 2 > N) {
    const Rational parity_lN = ((l - N) % 2 == 0) ? 0 : 1;
    value += Rational(N) * (Rational(3 * l - 2 - N) + parity_lN);
  }
  return value;
}

/// F_2(N, arg, 2) for odd N. Even arguments are reindexed as arg = 2l.
inline Rational f2_sum(std::int64_t N, std::int64_t arg) {
  require(N >= 3 && N % 2 != 0, errc::parity_violation,
          "F2 is defined here for odd N >= 3, got N=" + std::to_string(N));
  detail::require_l_range(arg, 1, N - 1);
  if (arg % 2 != 0)
    return 0;
  const std::int64_t l = arg / 2;
  const std::int64_t half = (N + 1) / 2;
  Rational value = -Rational(3 * l * (3 * l - 1), 2) + Rational(l * (l - 1), 2) - l;
  if (3 * l > half) {
    const Rational parity = ((l - half) % 2 == 0) ? 0 : 1;
    value += Rational(N) * (Rational(3 * l - half) + parity);
  }
  return value;
}

/// Parameter checks for `spec`, without evaluating anything.
inline Admissibility admissibility(const SumSpec &spec) {
  Admissibility a;
  a.n_even = spec.N % 2 == 0;
  a.l_even = spec.l % 2 == 0;
  const auto reject = [&](errc code, std::string why) {
    a.admissible = false;
    a.violation = code;
    a.reason = std::move(why);
    return a;
  };
  if (spec.N < 2)
    return reject(errc::argument_out_of_range, "N must be at least 2");
  const auto l_in = [&](std::int64_t lo, std::int64_t hi) { return spec.l >= lo && spec.l <= hi; };
  const std::string l_text = "l=" + std::to_string(spec.l);
  switch (spec.family) {
  case SumFamily::CycleR:
  case SumFamily::PathF:
  case SumFamily::T4l:
    if (!l_in(0, spec.N))
      return reject(errc::argument_out_of_range, l_text + " outside [0, N]");
    break;
  case SumFamily::ScottCos:
    if (!l_in(1, spec.N))
      return reject(errc::argument_out_of_range, l_text + " outside [1, N]");
    break;
  case SumFamily::InvSin2:
  case SumFamily::OddInvSin2:
    break;
  case SumFamily::Tm:
    if (spec.m < 1)
      return reject(errc::argument_out_of_range, "m must be at least 1");
    break;
  case SumFamily::Tml:
    if (spec.m < 1)
      return reject(errc::argument_out_of_range, "m must be at least 1");
    if (!l_in(0, spec.N))
      return reject(errc::argument_out_of_range, l_text + " outside [0, N]");
    a.within_recursion_domain = spec.l >= spec.m;
    break;
  case SumFamily::TmTwisted:
  case SumFamily::TmlTwisted:
    if (!a.n_even)
      return reject(errc::parity_violation, "twisted sums need even N");
    if (spec.m < 1)
      return reject(errc::argument_out_of_range, "m must be at least 1");
    if (spec.family == SumFamily::TmlTwisted && !l_in(0, spec.N))
      return reject(errc::argument_out_of_range, l_text + " outside [0, N]");
    if (spec.family == SumFamily::TmlTwisted)
      a.within_recursion_domain = spec.l - spec.m < spec.N / 2;
    break;
  case SumFamily::Sl:
    if (!a.n_even)
      return reject(errc::parity_violation, "S(l) needs even N");
    if (!l_in(0, spec.N))
      return reject(errc::argument_out_of_range, l_text + " outside [0, N]");
    break;
  case SumFamily::S1:
  case SumFamily::S2:
    if (!l_in(1, spec.N - 1))
      return reject(errc::argument_out_of_range, l_text + " outside [1, N-1]");
    break;
  case SumFamily::F1:
  case SumFamily::F2:
    if (a.n_even || spec.N < 3)
      return reject(errc::parity_violation, "F1/F2 need odd N >= 3");
    if (!l_in(1, spec.N - 1))
      return reject(errc::argument_out_of_range, l_text + " outside [1, N-1]");
    break;
  }
  return a;
}

/// Exact closed-form value of `spec`; throws on inadmissible parameters.
inline Rational evaluate(const SumSpec &spec) {
  const Admissibility a = admissibility(spec);
  if (!a.admissible)
    fail(*a.violation, std::string(family_name(spec.family)) + ": " + a.reason);
  switch (spec.family) {
  case SumFamily::CycleR: return cycle_resistance(spec.N, spec.l);
  case SumFamily::PathF: return path_sum(spec.N, spec.l);
  case SumFamily::ScottCos: return scott_sum(spec.N, spec.l);
  case SumFamily::InvSin2: return inv_sin2_sum(spec.N);
  case SumFamily::OddInvSin2: return odd_inv_sin2_sum(spec.N);
  case SumFamily::T4l: return t4_sum(spec.N, spec.l);
  case SumFamily::Tml: return t_ml_sum(spec.N, spec.l, spec.m);
  case SumFamily::Tm: return t_m_sum(spec.N, spec.m);
  case SumFamily::TmlTwisted: return t_ml_twisted(spec.N, spec.l, spec.m);
  case SumFamily::TmTwisted: return t_m_twisted(spec.N, spec.m);
  case SumFamily::Sl: return s_sum(spec.N, spec.l);
  case SumFamily::S1: return s1_sum(spec.N, spec.l);
  case SumFamily::S2: return s2_sum(spec.N, spec.l);
  case SumFamily::F1: return f1_sum(spec.N, spec.l);
  case SumFamily::F2: return f2_sum(spec.N, spec.l);
  }
  fail(errc::argument_out_of_range, "unknown family");
}

/// Direct summation of the defining series of `spec` at `precision`.
inline Float oracle_trig_sum(const SumSpec &spec, Precision precision) {
  const Admissibility a = admissibility(spec);
  if (!a.admissible)
    fail(*a.violation, std::string(family_name(spec.family)) + ": " + a.reason);
  PrecisionScope scope(Precision::of(precision.bits));
  const std::int64_t N = spec.N;
  const std::int64_t l = spec.l;
  const int two_m = static_cast<int>(2 * spec.m);
  const Float step = float_pi() / N;
  const auto sign = [](std::int64_t n) { return n % 2 == 0 ? 1 : -1; };
  const auto ratio = [&](std::int64_t n, std::int64_t mult) {
    return Float(sin(step * (n * mult * l))) / Float(sin(step * (n * mult)));
  };
  Float acc = 0;
  switch (spec.family) {
  case SumFamily::CycleR:
  case SumFamily::Sl:
  case SumFamily::T4l:
  case SumFamily::Tml:
  case SumFamily::TmlTwisted: {
    const int power = spec.family == SumFamily::CycleR || spec.family == SumFamily::Sl ? 2
                      : spec.family == SumFamily::T4l                                 ? 4
                                                                                      : two_m;
    for (std::int64_t n = 1; n < N; ++n) {
      const Float num = sin(step * (n * l));
      Float term = num * num / boost::multiprecision::pow(Float(sin(step * n)), power);
      if (spec.family == SumFamily::Sl)
        term *= sign(n);
      if (spec.family == SumFamily::TmlTwisted)
        term *= -sign(n);
      acc += term;
    }
    if (spec.family == SumFamily::CycleR)
      acc /= N;
    break;
  }
  case SumFamily::PathF:
    for (std::int64_t n = 1; n < N; ++n)
      acc += (1 - Float(cos(step * (n * l)))) / (1 - Float(cos(step * n)));
    acc /= N;
    break;
  case SumFamily::ScottCos:
  case SumFamily::OddInvSin2:
    for (std::int64_t n = 1; n <= N; ++n) {
      const Float den = 1 - Float(cos(step * (2 * n - 1)));
      acc += (spec.family == SumFamily::ScottCos ? Float(cos(step * ((2 * n - 1) * l))) : Float(1)) / den;
    }
    break;
  case SumFamily::InvSin2:
  case SumFamily::Tm:
  case SumFamily::TmTwisted: {
    const int power = spec.family == SumFamily::InvSin2 ? 2 : two_m;
    for (std::int64_t n = 1; n < N; ++n) {
      Float term = 1 / boost::multiprecision::pow(Float(sin(step * n)), power);
      if (spec.family == SumFamily::TmTwisted)
        term *= -sign(n);
      acc += term;
    }
    break;
  }
  case SumFamily::S1:
  case SumFamily::S2:
    for (std::int64_t n = 1; n < N; ++n)
      acc += ratio(n, 1) * (spec.family == SumFamily::S2 ? sign(n) : 1);
    break;
  case SumFamily::F1:
  case SumFamily::F2:
    for (std::int64_t n = 1; n < N; ++n)
      acc += ratio(n, 1) * ratio(n, 2) * (spec.family == SumFamily::F2 ? sign(n) : 1);
    break;
  }
  return acc;
}

struct VerificationReport {
  SumSpec spec;
  Rational closed;
  Float oracle;
  Float abs_error;
  Float tolerance;
  unsigned precision_bits = 256;
  bool passed = false;
  /// Set when the spec could not be evaluated; the report is then failed.
  std::optional<errc> error;
  std::string reason;
};

/// Closed form against the oracle at `precision`; passes when
/// |closed - oracle| < 2^(-bits/2). Evaluation errors become a failed report.
inline VerificationReport verify(const SumSpec &spec, Precision precision = {}) {
  VerificationReport r;
  r.spec = spec;
  r.precision_bits = precision.bits;
  try {
    PrecisionScope scope(Precision::of(precision.bits));
    r.closed = evaluate(spec);
    r.oracle = oracle_trig_sum(spec, precision);
    r.abs_error = abs(to_float(r.closed) - r.oracle);
    r.tolerance = oracle_tolerance(precision);
    r.passed = r.abs_error < r.tolerance;
  } catch (const error &e) {
    r.error = e.code();
    r.reason = e.what();
    r.passed = false;
  }
  return r;
}

/// Every admissible spec of `family` with 2 <= N <= N_max, all valid l and
/// 1 <= m <= m_max.
inline std::vector<SumSpec> admissible_grid(SumFamily family, std::int64_t N_max, std::int64_t m_max) {
  std::vector<SumSpec> out;
  const std::int64_t m_hi = uses_m(family) ? m_max : 0;
  const std::int64_t m_lo = uses_m(family) ? 1 : 0;
  for (std::int64_t N = 2; N <= N_max; ++N)
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const std::int64_t l_hi = uses_l(family) ? N : 0;
      for (std::int64_t l = 0; l <= l_hi; ++l) {
        SumSpec s{family, N, l, m};
        if (admissibility(s).admissible)
          out.push_back(s);
      }
    }
  return out;
}

} // namespace trigsum
