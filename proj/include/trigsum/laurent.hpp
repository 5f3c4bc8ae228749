#pragma once

// Truncated formal Laurent series over the rationals, and the coefficient
// ("residue") extraction built on them.
//
// A series lives in a single variable v. Generating functions in w that need
// half-integer powers of w are written with w = v^2, so sqrt(w) = v; see
// `w()` and `to_w_exponents()`.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"

namespace trigsum {

/// Window used when the caller does not supply one: 4 * (max parameter) + 8.
inline std::int64_t default_window(std::int64_t max_parameter) { return 4 * max_parameter + 8; }

class LaurentSeries {
public:
  /// Truncation order of a series whose every coefficient is known.
  static constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

  /// The zero polynomial.
  LaurentSeries() = default;

  /// sum_i coefficients[i] * v^(min_exponent + i); exponents >= truncation_order are unknown.
  LaurentSeries(std::int64_t min_exponent, std::vector<Rational> coefficients,
                std::int64_t truncation_order = unbounded)
      : min_(min_exponent), coeffs_(std::move(coefficients)), trunc_(truncation_order) {
    require(min_ <= trunc_, errc::window_exceeded,
            "min exponent " + std::to_string(min_) + " beyond truncation order " +
                std::to_string(trunc_));
    drop_unknown();
    normalize();
  }

  static LaurentSeries constant(Rational c) { return LaurentSeries(0, {std::move(c)}); }
  static LaurentSeries monomial(Rational c, std::int64_t exponent) {
    return LaurentSeries(exponent, {std::move(c)});
  }
  /// v^exponent.
  static LaurentSeries v(std::int64_t exponent = 1) { return monomial(1, exponent); }
  /// w^exponent = v^(2 * exponent).
  static LaurentSeries w(std::int64_t exponent = 1) { return monomial(1, 2 * exponent); }

  std::int64_t min_exponent() const noexcept { return min_; }
  std::int64_t truncation_order() const noexcept { return trunc_; }
  bool is_exact() const noexcept { return trunc_ >= unbounded; }
  const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
  /// One past the highest stored exponent.
  std::int64_t end_exponent() const noexcept {
    return min_ + static_cast<std::int64_t>(coeffs_.size());
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of v^k. Reading at or beyond the truncation order throws.
  Rational coefficient(std::int64_t k) const {
    if (k >= trunc_)
      fail(errc::window_exceeded, "coefficient of v^" + std::to_string(k) +
                                      " requested, series known only below v^" +
                                      std::to_string(trunc_));
    if (k < min_ || k >= end_exponent())
      return 0;
    return coeffs_[static_cast<std::size_t>(k - min_)];
  }

  /// Lowest exponent carrying a nonzero coefficient.
  std::int64_t valuation() const {
    require(!is_zero(), errc::zero_leading_coefficient,
            "series has no nonzero coefficient below v^" + std::to_string(trunc_));
    return min_;
  }

  LaurentSeries truncated(std::int64_t order) const {
    LaurentSeries r = *this;
    r.trunc_ = std::min(trunc_, order);
    if (r.min_ > r.trunc_)
      r.min_ = r.trunc_;
    r.drop_unknown();
    r.normalize();
    return r;
  }

  /// Multiplies by v^k.
  LaurentSeries shifted(std::int64_t k) const {
    LaurentSeries r = *this;
    r.min_ += k;
    if (!is_exact())
      r.trunc_ += k;
    return r;
  }

  /// Substitutes v -> v^p for p >= 1.
  LaurentSeries substituted(std::int64_t p) const {
    require(p >= 1, errc::argument_out_of_range, "substitution power must be positive");
    std::vector<Rational> c(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * static_cast<std::size_t>(p) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      c[i * static_cast<std::size_t>(p)] = coeffs_[i];
    return LaurentSeries(min_ * p, std::move(c), is_exact() ? unbounded : trunc_ * p);
  }

  /// True when every stored exponent is even, i.e. the series is a Laurent
  /// series in w = v^2.
  bool has_only_even_exponents() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0 && (min_ + static_cast<std::int64_t>(i)) % 2 != 0)
        return false;
    return true;
  }

  /// Reinterprets a series in v with even exponents as a series in w.
  LaurentSeries to_w_exponents() const {
    require(has_only_even_exponents(), errc::argument_out_of_range,
            "series contains half-integer powers of w");
    std::vector<Rational> c;
    const std::int64_t lo = floor_half(min_);
    for (std::int64_t e = min_; e < end_exponent(); ++e)
      if (e % 2 == 0) {
        c.resize(static_cast<std::size_t>(e / 2 - lo) + 1);
        c.back() = coefficient(e);
      }
    return LaurentSeries(lo, std::move(c), is_exact() ? unbounded : ceil_half(trunc_));
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto &c : r.coeffs_)
      c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) {
    return combine(a, b, Rational(1));
  }
  friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) {
    return combine(a, b, Rational(-1));
  }

  friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) {
    const std::int64_t trunc = std::min(saturating_add(a.trunc_, b.min_), saturating_add(b.trunc_, a.min_));
    if (a.is_zero() || b.is_zero())
      return LaurentSeries(std::min(a.min_ + b.min_, trunc), {}, trunc);
    const std::int64_t lo = a.min_ + b.min_;
    const std::int64_t hi = std::min(a.end_exponent() + b.end_exponent() - 1, trunc);
    std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const std::size_t k = i + j;
        if (k >= c.size())
          break;
        c[k] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(std::min(lo, trunc), std::move(c), trunc);
  }

  friend LaurentSeries operator*(const Rational &s, const LaurentSeries &a) {
    LaurentSeries r = a;
    for (auto &c : r.coeffs_)
      c *= s;
    r.normalize();
    return r;
  }
  friend LaurentSeries operator*(const LaurentSeries &a, const Rational &s) { return s * a; }

  LaurentSeries &operator+=(const LaurentSeries &b) { return *this = *this + b; }
  LaurentSeries &operator-=(const LaurentSeries &b) { return *this = *this - b; }
  LaurentSeries &operator*=(const LaurentSeries &b) { return *this = *this * b; }

  /// Structural equality (same window, same coefficients).
  friend bool operator==(const LaurentSeries &a, const LaurentSeries &b) {
    return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.min_ == b.min_);
  }

  /// Equality of every coefficient both series know.
  friend bool agree_on_common_window(const LaurentSeries &a, const LaurentSeries &b) {
    const std::int64_t trunc = std::min(a.trunc_, b.trunc_);
    const std::int64_t lo = std::min(a.min_, b.min_);
    const std::int64_t hi = std::min(std::max(a.end_exponent(), b.end_exponent()), trunc);
    for (std::int64_t k = lo; k < hi; ++k)
      if (a.coefficient(k) != b.coefficient(k))
        return false;
    return true;
  }

private:
  static std::int64_t saturating_add(std::int64_t x, std::int64_t y) {
    if (x >= unbounded || y >= unbounded)
      return unbounded;
    return std::min(x + y, unbounded);
  }
  static std::int64_t floor_half(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
  static std::int64_t ceil_half(std::int64_t x) { return -floor_half(-x); }

  static LaurentSeries combine(const LaurentSeries &a, const LaurentSeries &b, const Rational &sign) {
    const std::int64_t trunc = std::min(a.trunc_, b.trunc_);
    if (a.is_zero() && b.is_zero())
      return LaurentSeries(std::min({a.min_, b.min_, trunc}), {}, trunc);
    std::int64_t lo = a.is_zero() ? b.min_ : b.is_zero() ? a.min_ : std::min(a.min_, b.min_);
    lo = std::min(lo, trunc);
    const std::int64_t hi = std::min(std::max(a.end_exponent(), b.end_exponent()), trunc);
    std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)));
    for (std::int64_t k = lo; k < hi; ++k) {
      auto &slot = c[static_cast<std::size_t>(k - lo)];
      if (k >= a.min_ && k < a.end_exponent())
        slot += a.coeffs_[static_cast<std::size_t>(k - a.min_)];
      if (k >= b.min_ && k < b.end_exponent())
        slot += sign * b.coeffs_[static_cast<std::size_t>(k - b.min_)];
    }
    return LaurentSeries(lo, std::move(c), trunc);
  }

  void drop_unknown() {
    if (end_exponent() > trunc_)
      coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(trunc_ - min_, 0)));
  }

  // Trims zero coefficients at both ends; the represented value is unchanged.
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
      ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_ += static_cast<std::int64_t>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::int64_t min_ = 0;
  std::vector<Rational> coeffs_;
  std::int64_t trunc_ = unbounded;
};

/// Coefficient of v^k, the residue res_v s(v) v^(-k-1).
inline Rational series_residue(const LaurentSeries &s, std::int64_t k) { return s.coefficient(k); }

/// Coefficient of w^k for a series written in v with w = v^2.
inline Rational w_coefficient(const LaurentSeries &s, std::int64_t k) { return s.coefficient(2 * k); }

/// res_{w=0}: the coefficient of w^(-1).
inline Rational residue_w(const LaurentSeries &s) { return w_coefficient(s, -1); }

inline LaurentSeries pow(const LaurentSeries &base, unsigned n) {
  LaurentSeries result = LaurentSeries::constant(1);
  LaurentSeries b = base;
  while (n > 0) {
    if (n & 1u)
      result *= b;
    n >>= 1u;
    if (n > 0)
      b *= b;
  }
  return result;
}

/// t with s * t = 1 on the common window. When s is exact (a Laurent
/// polynomial) the inverse is cut at `window`.
inline LaurentSeries series_inverse(const LaurentSeries &s, std::int64_t window) {
  if (s.is_zero())
    fail(errc::zero_leading_coefficient, "series has no nonzero coefficient inside its window");
  const std::int64_t e0 = s.valuation();
  const Rational lead = s.coefficient(e0);
  const std::int64_t rel = s.is_exact() ? LaurentSeries::unbounded : s.truncation_order() - e0;
  const std::int64_t trunc = std::min(window, s.is_exact() ? window : -e0 + rel);
  require(trunc >= -e0, errc::window_exceeded,
          "window " + std::to_string(window) + " too small for an inverse starting at v^" +
              std::to_string(-e0));
  const std::size_t count = static_cast<std::size_t>(trunc + e0);
  std::vector<Rational> t(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = (k == 0) ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k; ++j) {
      const std::int64_t e = e0 + static_cast<std::int64_t>(j);
      if (e >= s.end_exponent())
        break;
      acc -= s.coefficient(e) * t[k - j];
    }
    t[k] = acc / lead;
  }
  return LaurentSeries(-e0, std::move(t), trunc);
}

inline LaurentSeries series_inverse(const LaurentSeries &s) {
  const std::int64_t span = s.is_zero() ? 0 : s.end_exponent() - s.min_exponent();
  return series_inverse(s, default_window(span));
}

/// (1 - 4v)^(-1/2) = sum_k C(2k, k) v^k, known below v^order, generated by
/// c_0 = 1, c_{k+1} = c_k (4k + 2) / (k + 1).
inline LaurentSeries central_binomial_series(std::int64_t order) {
  require(order >= 0, errc::window_exceeded, "negative order");
  std::vector<Rational> c(static_cast<std::size_t>(order));
  Rational ck = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    c[static_cast<std::size_t>(k)] = ck;
    ck = ck * (4 * k + 2) / (k + 1);
  }
  return LaurentSeries(0, std::move(c), order);
}

/// C(n, k) by the multiplicative formula; 0 outside 0 <= k <= n.
inline Rational binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return Rational(num, den);
}

/// C(n, k) = res_v (1+v)^n v^(-k-1).
inline Rational binomial_by_residue(std::int64_t n, std::int64_t k) {
  require(n >= 0, errc::argument_out_of_range, "binomial of negative n");
  const LaurentSeries one_plus_v(0, {1, 1});
  return series_residue(pow(one_plus_v, static_cast<unsigned>(n)), k);
}

/// C(2n, n) = res_v (1-4v)^(-1/2) v^(-n-1).
inline Rational central_binomial_by_residue(std::int64_t n) {
  return series_residue(central_binomial_series(n + 1), n);
}

enum class ChebyshevKind {
  FirstNormalized, ///< C_n(x) = 2 T_n(x/2)
  Second,          ///< U_n(x/2)
};

/// Polynomial coefficients of C_n(x) or U_n(x/2): entry i is the coefficient of x^i.
inline std::vector<Rational> chebyshev_coefficients(ChebyshevKind kind, std::int64_t n) {
  require(n >= 0, errc::argument_out_of_range, "negative Chebyshev degree");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  if (kind == ChebyshevKind::FirstNormalized && n == 0) {
    c[0] = 2;
    return c;
  }
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    Rational term = sign_power(k) * binomial(n - k, k);
    if (kind == ChebyshevKind::FirstNormalized)
      term = term * n / (n - k);
    c[static_cast<std::size_t>(n - 2 * k)] = term;
  }
  return c;
}

/// C_n or U_n evaluated at x = v^(-step) + v^step, truncated at `window`.
///
/// step = 1 is the node x = (1+w)/sqrt(w); step = 2 is x = (1+w^2)/w.
inline LaurentSeries chebyshev_at_node(ChebyshevKind kind, std::int64_t n, std::int64_t step,
                                       std::int64_t window = LaurentSeries::unbounded) {
  require(step >= 1, errc::argument_out_of_range, "node step must be positive");
  require(window > -n * step, errc::window_exceeded,
          "window " + std::to_string(window) + " excludes every term of the degree-" +
              std::to_string(n) + " Chebyshev expansion");
  const auto coeffs = chebyshev_coefficients(kind, n);
  const LaurentSeries x = LaurentSeries::v(-step) + LaurentSeries::v(step);
  LaurentSeries result;
  LaurentSeries x_power = LaurentSeries::constant(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0)
      result += coeffs[i] * x_power;
    if (i + 1 < coeffs.size())
      x_power *= x;
  }
  return result.truncated(window);
}

/// C_n((1+w)/sqrt(w)) or U_n((1+w)/(2 sqrt(w))) as a series in v (w = v^2).
inline LaurentSeries chebyshev_eval_at_node(ChebyshevKind kind, std::int64_t n,
                                            std::int64_t window = LaurentSeries::unbounded) {
  return chebyshev_at_node(kind, n, 1, window);
}

/// 1 / (1 - v^p) known below v^window.
inline LaurentSeries geometric_inverse(std::int64_t p, std::int64_t window) {
  require(p >= 1, errc::argument_out_of_range, "geometric step must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(std::max<std::int64_t>(window, 0)));
  for (std::int64_t k = 0; k < window; k += p)
    c[static_cast<std::size_t>(k)] = 1;
  return LaurentSeries(0, std::move(c), std::max<std::int64_t>(window, 0));
}

} // namespace trigsum
