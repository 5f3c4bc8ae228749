#pragma once

// High-precision floating arithmetic for the brute-force oracles.

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

#include "trigsum/error.hpp"
#include "trigsum/exact.hpp"

namespace trigsum {

/// Expression templates are off so `auto` never captures a dangling expression.
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

/// Working precision of an oracle, in bits.
struct Precision {
  unsigned bits = 256;

  static Precision of(unsigned bits) {
    require(bits >= 64, errc::argument_out_of_range,
            "oracle precision must be at least 64 bits, got " + std::to_string(bits));
    return Precision{bits};
  }

  /// Decimal digits that fit in `bits` binary digits.
  unsigned decimal_digits() const {
    return static_cast<unsigned>(std::floor(bits * 0.30102999566398120));
  }
};

/// Sets the MPFR default precision for its lifetime.
///
/// Boost keeps the default precision in one process-wide slot, so oracle
/// evaluations at different precisions must not overlap in time.
class PrecisionScope {
public:
  explicit PrecisionScope(Precision p) : saved_(Float::default_precision()) {
    Float::default_precision(static_cast<unsigned>(std::ceil(p.bits * 0.30102999566398120)) + 2);
  }
  ~PrecisionScope() { Float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope &) = delete;
  PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
  unsigned saved_;
};

inline Float float_pi() {
  Float p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline Float to_float(const Rational &x) {
  return Float(numerator_of(x)) / Float(denominator_of(x));
}

/// 2^(-exponent) at the current precision.
inline Float pow2_neg(unsigned exponent) {
  Float r = 1;
  mpfr_div_2ui(r.backend().data(), r.backend().data(), exponent, MPFR_RNDN);
  return r;
}

/// Absolute tolerance used by every oracle comparison: 2^(-bits/2).
inline Float oracle_tolerance(Precision p) { return pow2_neg(p.bits / 2); }

inline std::string to_decimal(const Float &x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

} // namespace trigsum
