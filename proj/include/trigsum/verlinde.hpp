#pragma once

// Dimensions of spaces of SU(2) and SO(3) conformal blocks from the exact
// T-recursions, with the genus generating function as a numeric cross-check.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trigsum/bigfloat.hpp"
#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/trig_sums.hpp"

namespace trigsum {

struct BlockDimensionQuery {
  std::int64_t genus = 2;
  std::int64_t level = 1;
  bool twisted = false;
};

namespace detail {

inline Rational checked_dimension(Rational value, std::int64_t g, std::int64_t k, const char *what) {
  if (!is_integer(value) || value <= 0)
    fail(errc::non_integer_result, std::string(what) + " at g=" + std::to_string(g) + ", k=" +
                                       std::to_string(k) + " is " + to_string(value));
  return value;
}

/// ((k+2)/2)^(g-1) T_{2(g-1)}(k+2) without range checks; g = 1 gives k + 1.
inline Rational untwisted_unchecked(std::int64_t g, std::int64_t k) {
  const std::int64_t N = k + 2;
  return pow(Rational(N, 2), static_cast<unsigned>(g - 1)) * t_m_sequence(N, g - 1).back();
}

} // namespace detail

/// dim V_{g,k} = ((k+2)/2)^(g-1) sum_{n=1}^{k+1} 1/sin^(2g-2)(n pi/(k+2)).
/// Level 0 is accepted and gives 1.
inline Rational dim_untwisted(std::int64_t g, std::int64_t k) {
  require(g >= 2, errc::argument_out_of_range, "genus must be at least 2");
  require(k >= 0, errc::argument_out_of_range, "level must be non-negative");
  return detail::checked_dimension(detail::untwisted_unchecked(g, k), g, k, "dim V");
}

/// Closed polynomials in k for g = 2, 3, 4.
inline Rational dim_untwisted_closed(std::int64_t g, std::int64_t k) {
  require(k >= 0, errc::argument_out_of_range, "level must be non-negative");
  const Rational a = Rational((k + 1) * (k + 2) * (k + 3), 6);
  switch (g) {
  case 2:
    return a;
  case 3:
    return a * (a + 2 * (k + 2)) / 5;
  case 4:
    return a * (a * Rational(2 * (k + 1) * (k + 2) * (k + 3) + 27 * (k + 2), 6) + 6 * (k + 2) * (k + 2)) / 35;
  default:
    fail(errc::unsupported_genus, "closed polynomial known for g = 2, 3, 4 only, got g=" + std::to_string(g));
  }
}

/// dim V^t_{g,k} = ((k+2)/2)^(g-1) sum (-1)^(n+1) / sin^(2g-2)(n pi/(k+2)), k even.
inline Rational dim_twisted(std::int64_t g, std::int64_t k) {
  require(g >= 2, errc::argument_out_of_range, "genus must be at least 2");
  require(k >= 2, errc::argument_out_of_range, "level must be at least 2");
  if (k % 2 != 0)
    fail(errc::parity_violation, "twisted blocks need even level, got k=" + std::to_string(k));
  const std::int64_t N = k + 2;
  const Rational value = pow(Rational(N, 2), static_cast<unsigned>(g - 1)) * t_m_twisted(N, g - 1);
  return detail::checked_dimension(value, g, k, "dim V^t");
}

inline Rational block_dimension(const BlockDimensionQuery &q) {
  return q.twisted ? dim_twisted(q.genus, q.level) : dim_untwisted(q.genus, q.level);
}

/// Where the level shift sits in dim V^t = dim V - 2^g dim V_{g, k/2 - 1}.
enum class TwistConvention {
  Unshifted, ///< dim V^t_{g,k} = dim V_{g,k} - 2^g dim V_{g,k/2-1}
  Shifted,   ///< dim V^t_{g,k-2} = dim V_{g,k-2} - 2^g dim V_{g,k/2-1}
};

/// dim V^t_{g,k} predicted from untwisted dimensions under `convention`.
inline Rational twisted_from_untwisted(std::int64_t g, std::int64_t k,
                                       TwistConvention convention = TwistConvention::Unshifted) {
  require(k >= 2 && k % 2 == 0, errc::parity_violation, "twisted blocks need even level >= 2");
  // Under the shifted reading the level K = k + 2 carries the half-level.
  const std::int64_t half = convention == TwistConvention::Unshifted ? k / 2 - 1 : k / 2;
  return dim_untwisted(g, k) - power_of_two(g) * dim_untwisted(g, half);
}

struct GenfunSample {
  double angle = 0;
  Float partial_sum;
  Float closed_value;
  Float residual;
  Float tail_bound;
  bool passed = false;
};

struct GenfunReport {
  std::int64_t k = 3;
  std::int64_t g_max = 1;
  unsigned precision_bits = 256;
  std::vector<GenfunSample> samples;
  bool passed = false;
};

/// Checks sum_{g=1}^{g_max} dim V_{g,k-2} ((2/k) sin^2 x)^(g-1) against
/// k sin((k-1)x) / (sin(kx) cos x) at each angle.
///
/// Term g is sum_n (sin^2 x / sin^2(n pi/k))^(g-1) <= (k-1) rho^(g-1) with
/// rho = sin^2 x / sin^2(pi/k), so the dropped tail is at most
/// (k-1) rho^g_max / (1 - rho). A sample passes when the residual is below
/// that bound plus 2^(-bits/2).
inline GenfunReport genfun_check(std::int64_t k, std::int64_t g_max, const std::vector<double> &angles,
                                 Precision precision = {}) {
  require(k >= 3, errc::argument_out_of_range, "generating function check needs k >= 3");
  require(g_max >= 1, errc::argument_out_of_range, "g_max must be positive");
  PrecisionScope scope(Precision::of(precision.bits));
  GenfunReport report;
  report.k = k;
  report.g_max = g_max;
  report.precision_bits = precision.bits;

  std::vector<Rational> dims(static_cast<std::size_t>(g_max));
  const auto T = t_m_sequence(k, g_max - 1);
  for (std::int64_t g = 1; g <= g_max; ++g)
    dims[static_cast<std::size_t>(g - 1)] =
        pow(Rational(k, 2), static_cast<unsigned>(g - 1)) * T[static_cast<std::size_t>(g - 1)];

  const Float pi = float_pi();
  const Float singular_threshold = pow2_neg(precision.bits / 4);
  const Float tolerance = oracle_tolerance(precision);
  report.passed = true;
  for (double x_in : angles) {
    const Float x = x_in;
    const Float s = sin(x);
    const Float denominator = Float(sin(k * x)) * Float(cos(x));
    if (abs(denominator) < singular_threshold)
      fail(errc::singular_sample_point, "sin(kx) cos(x) vanishes at x=" + std::to_string(x_in));
    const Float sk = sin(pi / k);
    const Float rho = s * s / (sk * sk);
    if (rho >= 1)
      fail(errc::argument_out_of_range,
           "x=" + std::to_string(x_in) + " is outside the disc of convergence (|sin x| >= sin(pi/k))");
    const Float r = 2 * s * s / k;
    GenfunSample sample;
    sample.angle = x_in;
    Float power = 1;
    Float acc = 0;
    for (const auto &d : dims) {
      acc += to_float(d) * power;
      power *= r;
    }
    sample.partial_sum = acc;
    sample.closed_value = k * Float(sin((k - 1) * x)) / denominator;
    sample.residual = abs(sample.closed_value - sample.partial_sum);
    sample.tail_bound = (k - 1) * Float(pow(rho, static_cast<int>(g_max))) / (1 - rho);
    sample.passed = sample.residual <= sample.tail_bound + tolerance;
    report.passed = report.passed && sample.passed;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

} // namespace trigsum
