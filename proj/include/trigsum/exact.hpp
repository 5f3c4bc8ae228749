#pragma once

// Exact value types: arbitrary-precision rationals and the field Q(sqrt 3).

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <ostream>
#include <string>

#include "trigsum/error.hpp"

namespace trigsum {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Always stored in lowest terms with a positive denominator (GMP mpq
/// canonical form), so structural equality is value equality.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  require(den != 0, errc::argument_out_of_range, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational &x) {
  return boost::multiprecision::numerator(x);
}
inline BigInt denominator_of(const Rational &x) {
  return boost::multiprecision::denominator(x);
}

inline bool is_integer(const Rational &x) { return denominator_of(x) == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &x) { return x.str(); }

/// Parses "p", "-p" or "p/q" in base 10.
inline Rational parse_rational(const std::string &text) {
  const auto valid_integer = [](const std::string &s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.find_first_not_of("+-") == std::string::npos)
    fail(errc::parse_error, "not a rational: '" + text + "'");
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  require(d != 0, errc::parse_error, "zero denominator in '" + text + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

inline Rational pow(Rational base, unsigned exponent) {
  Rational result = 1;
  while (exponent > 0) {
    if (exponent & 1u)
      result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

inline Rational sign_power(std::int64_t exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

inline Rational power_of_two(std::int64_t exponent) {
  Rational two = 2;
  Rational p = pow(two, static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(1) / p : p;
}

/// Element a + b*sqrt(3) of Q(sqrt 3).
class QuadraticValue {
public:
  QuadraticValue() = default;
  QuadraticValue(Rational rational_part, Rational root3_part = 0)
      : a_(std::move(rational_part)), b_(std::move(root3_part)) {}
  QuadraticValue(std::int64_t value) : a_(value), b_(0) {}

  static QuadraticValue root3() { return {0, 1}; }

  const Rational &rational_part() const noexcept { return a_; }
  const Rational &root3_part() const noexcept { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadraticValue conjugate() const { return {a_, -b_}; }

  /// (a + b sqrt3)(a - b sqrt3) = a^2 - 3 b^2.
  Rational norm() const { return a_ * a_ - 3 * b_ * b_; }

  QuadraticValue inverse() const {
    require(!is_zero(), errc::argument_out_of_range, "inverse of zero in Q(sqrt3)");
    const Rational n = norm();
    return {a_ / n, -b_ / n};
  }

  QuadraticValue operator-() const { return {-a_, -b_}; }

  QuadraticValue &operator+=(const QuadraticValue &y) {
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  QuadraticValue &operator-=(const QuadraticValue &y) {
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  QuadraticValue &operator*=(const QuadraticValue &y) {
    Rational a = a_ * y.a_ + 3 * b_ * y.b_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadraticValue &operator/=(const QuadraticValue &y) { return *this *= y.inverse(); }

  friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue &y) { return x += y; }
  friend QuadraticValue operator-(QuadraticValue x, const QuadraticValue &y) { return x -= y; }
  friend QuadraticValue operator*(QuadraticValue x, const QuadraticValue &y) { return x *= y; }
  friend QuadraticValue operator/(QuadraticValue x, const QuadraticValue &y) { return x /= y; }

  friend bool operator==(const QuadraticValue &x, const QuadraticValue &y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadraticValue &x, const QuadraticValue &y) { return !(x == y); }

  friend std::ostream &operator<<(std::ostream &os, const QuadraticValue &x) {
    return os << x.a_ << " + " << x.b_ << "*sqrt(3)";
  }

private:
  Rational a_ = 0;
  Rational b_ = 0;
};

inline QuadraticValue quad_pow(QuadraticValue base, std::uint64_t n) {
  QuadraticValue result = 1;
  while (n > 0) {
    if (n & 1u)
      result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

inline Rational quad_to_rational(const QuadraticValue &x) {
  if (!x.is_rational())
    fail(errc::non_rational_value,
         "sqrt(3) component is " + to_string(x.root3_part()));
  return x.rational_part();
}

/// 2 - sqrt(3), the base of every geometric term of the 2xN ladder.
inline QuadraticValue two_minus_root3() { return {2, -1}; }

} // namespace trigsum
