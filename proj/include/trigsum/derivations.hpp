#pragma once

// The closed forms re-derived by coefficient extraction: every value here is
// read off a Laurent series built by the engine, never from the polynomial
// answer. Tests compare these against trig_sums.hpp.
//
// Series are in v with w = v^2; "res" is the coefficient of w^-1.

#include <cstdint>

#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/laurent.hpp"
#include "trigsum/trig_sums.hpp"

namespace trigsum {

namespace detail {

/// 1 + w^p as an exact series in v.
inline LaurentSeries one_plus_w_power(std::int64_t p) {
  return LaurentSeries::constant(1) + LaurentSeries::w(p);
}

/// (1 + w)^(-p), known below v^window.
inline LaurentSeries inverse_binomial_series(unsigned p, std::int64_t window) {
  return series_inverse(pow(one_plus_w_power(1), p), window);
}

/// 1 / (1 - w^p), known below v^window.
inline LaurentSeries geometric_in_w(std::int64_t p, std::int64_t window) {
  return geometric_inverse(2 * p, window);
}

/// U_n((1+w)/(2 sqrt w)) U_n((1+w^2)/(2w)).
inline LaurentSeries second_kind_node_product(std::int64_t n) {
  return chebyshev_at_node(ChebyshevKind::Second, n, 1) * chebyshev_at_node(ChebyshevKind::Second, n, 2);
}

} // namespace detail

/// res 1/((1+w)^p w^q).
inline Rational inverse_binomial_residue(unsigned p, std::int64_t q) {
  const std::int64_t window = default_window(std::max<std::int64_t>(q, 1));
  return residue_w(detail::inverse_binomial_series(p, window) * LaurentSeries::w(-q));
}

/// res 1/((1+w)^3 w^(l-1)); closed value (-1)^l l(l-1)/2.
inline Rational cycle_first_residue(std::int64_t l) { return inverse_binomial_residue(3, l - 1); }

/// res 1/((1+w)^2 w^l); closed value (-1)^(l+1) l.
inline Rational cycle_second_residue(std::int64_t l) { return inverse_binomial_residue(2, l); }

/// First part of the cycle resistance, through the Chebyshev route:
/// (-1)^(l+1) (2/N) res w/(1+w)^3 (C_2l((1+w)/sqrt w) - (-1)^l) = -l(l-1)/N.
inline Rational cycle_first_term_by_chebyshev(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  require(l >= 1, errc::argument_out_of_range, "l must be positive");
  const std::int64_t window = default_window(l);
  const LaurentSeries c = chebyshev_eval_at_node(ChebyshevKind::FirstNormalized, 2 * l);
  const LaurentSeries integrand = LaurentSeries::w(1) * detail::inverse_binomial_series(3, window) *
                                  (c - LaurentSeries::constant(sign_power(l)));
  return sign_power(l + 1) * 2 * residue_w(integrand) / N;
}

/// l(N-l)/N assembled from the two residues: the first through the
/// Chebyshev node, the second as (-1)^(l+1) (N-1)/N res 1/((1+w)^2 w^l).
inline Rational cycle_resistance_by_residue(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  if (l == 0)
    return 0;
  return cycle_first_term_by_chebyshev(N, l) +
         sign_power(l + 1) * Rational(N - 1) * cycle_second_residue(l) / N;
}

/// (-1)^(l+1) res 1/((1+w)^5 w^(l-2)) = (l+1)l(l-1)(l-2)/24.
inline Rational t4_quartic_residue(std::int64_t l) {
  return sign_power(l + 1) * inverse_binomial_residue(5, l - 2);
}

/// (-1)^(l+1) res 1/((1+w)^4 w^(l-1)) = -(l+1)l(l-1)/6.
inline Rational t4_cubic_residue(std::int64_t l) {
  return sign_power(l + 1) * inverse_binomial_residue(4, l - 1);
}

/// T_4(l) = l^2 (N^2-1)/3 + 8 (quartic residue) + 4 (N-1) (cubic residue).
inline Rational t4_by_residue(std::int64_t N, std::int64_t l) {
  detail::require_modulus(N);
  detail::require_l_range(l, 0, N);
  return Rational(l * l) * inv_sin2_sum(N) + 8 * t4_quartic_residue(l) +
         4 * Rational(N - 1) * t4_cubic_residue(l);
}

/// Tail of the T_2m(l) recursion as two residues:
/// (-1)^(l+1) 2^(2m-1) res 1/((1+w)^(2m+1) w^(l-m))
///   + (-1)^(l+1) 2^(2m-2) (N-1) res 1/((1+w)^(2m) w^(l+1-m)).
inline Rational t_ml_tail_by_residue(std::int64_t N, std::int64_t l, std::int64_t m) {
  detail::require_modulus(N);
  require(m >= 1, errc::argument_out_of_range, "m must be at least 1");
  const auto p = static_cast<unsigned>(2 * m);
  return sign_power(l + 1) * power_of_two(2 * m - 1) * inverse_binomial_residue(p + 1, l - m) +
         sign_power(l + 1) * power_of_two(2 * m - 2) * Rational(N - 1) * inverse_binomial_residue(p, l + 1 - m);
}

/// T_2m(l) with the recursion's tail taken from the residues.
inline Rational t_ml_by_residue(std::int64_t N, std::int64_t l, std::int64_t m) {
  detail::require_l_range(l, 0, N);
  const Rational tail = t_ml_tail_by_residue(N, l, m);
  const auto T = t_m_sequence(N, m - 1);
  Rational acc = 0;
  for (std::int64_t s = 1; s < m; ++s)
    acc += sign_power(s + 1) * detail::multiple_angle_coefficient(l, s) * power_of_two(2 * s) *
           T[static_cast<std::size_t>(m - s)];
  return acc / 2 + tail;
}

/// S_1(arg) for odd arg = 2l-1:
/// -2 res U_{2l-2}((1+w)/(2 sqrt w)) / (1-w) + (N-1) res U_{2l-2}(...) / w.
/// Even arguments contribute nothing.
inline Rational s1_by_residue(std::int64_t N, std::int64_t arg) {
  detail::require_modulus(N);
  detail::require_l_range(arg, 1, N - 1);
  if (arg % 2 == 0)
    return 0;
  const std::int64_t l = (arg + 1) / 2;
  const LaurentSeries u = chebyshev_eval_at_node(ChebyshevKind::Second, 2 * l - 2);
  const LaurentSeries first = u * detail::geometric_in_w(1, default_window(l));
  const LaurentSeries second = u * LaurentSeries::w(-1);
  return -2 * residue_w(first) + Rational(N - 1) * residue_w(second);
}

/// S_2(arg). Odd arg = 2l-1, N even:
///   -2 res 1/(w^(l-1) (1-w)^2) - res 1/(w^l (1-w)).
/// Even arg = 2l, N odd: -2 res 1/(w^l (1-w)^2). Other parities vanish.
inline Rational s2_by_residue(std::int64_t N, std::int64_t arg) {
  detail::require_modulus(N);
  detail::require_l_range(arg, 1, N - 1);
  if ((arg + N) % 2 == 0)
    return 0;
  const std::int64_t window = default_window(arg);
  const LaurentSeries g = detail::geometric_in_w(1, window);
  const LaurentSeries g2 = g * g;
  if (arg % 2 != 0) {
    const std::int64_t l = (arg + 1) / 2;
    return -2 * residue_w(LaurentSeries::w(-(l - 1)) * g2) - residue_w(LaurentSeries::w(-l) * g);
  }
  const std::int64_t l = arg / 2;
  return -2 * residue_w(LaurentSeries::w(-l) * g2);
}

/// U_{2l-2}(node 1) U_{2l-2}(node 2) in closed form:
/// (w^-(3l-3) - w^-(l-2) - w^(l+1) + w^(3l)) / ((1-w)(1-w^2)), known below v^window.
inline LaurentSeries chebyshev_product_closed(std::int64_t l, std::int64_t window) {
  require(l >= 1, errc::argument_out_of_range, "l must be positive");
  const LaurentSeries numerator = LaurentSeries::w(-(3 * l - 3)) - LaurentSeries::w(-(l - 2)) -
                                  LaurentSeries::w(l + 1) + LaurentSeries::w(3 * l);
  const std::int64_t inner = window + 2 * (3 * l - 3);
  return (numerator * detail::geometric_in_w(1, inner) * detail::geometric_in_w(2, inner)).truncated(window);
}

/// Parts of F_1(N, 2l-1, 2): the plain power-sum term, the (N-1) term and the
/// multiple-of-N correction.
struct F1Parts {
  Rational power_sum;
  Rational constant;
  Rational correction;
  Rational total() const { return power_sum + constant + correction; }
};

/// F_1 for odd arg = 2l-1 with U = U_{2l-2}(node 1) U_{2l-2}(node 2):
/// -2 res U/(1-w) + (N-1) res U/w + 2N res U w^(N-1)/(1-w^N).
inline F1Parts f1_parts_by_residue(std::int64_t N, std::int64_t arg) {
  require(N >= 3 && N % 2 != 0, errc::parity_violation, "F1 needs odd N >= 3");
  detail::require_l_range(arg, 1, N - 1);
  if (arg % 2 == 0)
    return {};
  const std::int64_t l = (arg + 1) / 2;
  const LaurentSeries u = detail::second_kind_node_product(2 * l - 2);
  const std::int64_t window = default_window(3 * l + N);
  F1Parts parts;
  parts.power_sum = -2 * residue_w(u * detail::geometric_in_w(1, window));
  parts.constant = Rational(N - 1) * residue_w(u * LaurentSeries::w(-1));
  parts.correction =
      2 * Rational(N) * residue_w(u * LaurentSeries::w(N - 1) * detail::geometric_in_w(N, window));
  return parts;
}

inline Rational f1_by_residue(std::int64_t N, std::int64_t arg) { return f1_parts_by_residue(N, arg).total(); }

/// F_2 for even arg = 2l with U = U_{2l-1}(node 1) U_{2l-1}(node 2):
/// -2 res U/(sqrt w (1-w)) + 2N res U w^(N/2)/(w (1-w^N)).
/// Half-integer powers of w are exact in v; with N odd, w^(N/2) = v^N.
inline Rational f2_by_residue(std::int64_t N, std::int64_t arg) {
  require(N >= 3 && N % 2 != 0, errc::parity_violation, "F2 needs odd N >= 3");
  detail::require_l_range(arg, 1, N - 1);
  if (arg % 2 != 0)
    return 0;
  const std::int64_t l = arg / 2;
  const LaurentSeries u = detail::second_kind_node_product(2 * l - 1);
  const std::int64_t window = default_window(3 * l + N);
  const LaurentSeries first = u * LaurentSeries::v(-1) * detail::geometric_in_w(1, window);
  const LaurentSeries second = u * LaurentSeries::v(N - 2) * detail::geometric_in_w(N, window);
  return -2 * residue_w(first) + 2 * Rational(N) * residue_w(second);
}

} // namespace trigsum
