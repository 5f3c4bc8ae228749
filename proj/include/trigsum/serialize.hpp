#pragma once

// JSON and CSV forms of specs and verification reports. Exact values are
// strings "p/q" (or "p"), floats are decimal strings at the report's
// precision.

#include <json.hpp>

#include <sstream>
#include <string>

#include "trigsum/bigfloat.hpp"
#include "trigsum/exact.hpp"
#include "trigsum/trig_sums.hpp"

namespace trigsum {

using Json = nlohmann::ordered_json;

inline Json to_json(const SumSpec &spec) {
  Json j;
  j["family"] = std::string(family_name(spec.family));
  j["N"] = spec.N;
  if (uses_l(spec.family))
    j["l"] = spec.l;
  if (uses_m(spec.family))
    j["m"] = spec.m;
  return j;
}

inline SumSpec spec_from_json(const Json &j) {
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family)
    fail(errc::parse_error, "unknown family '" + j.at("family").get<std::string>() + "'");
  SumSpec spec;
  spec.family = *family;
  spec.N = j.at("N").get<std::int64_t>();
  spec.l = j.value("l", std::int64_t{0});
  spec.m = j.value("m", std::int64_t{0});
  return spec;
}

inline Rational rational_from_json(const Json &j) {
  if (!j.is_string())
    fail(errc::parse_error, "exact values are serialized as strings");
  return parse_rational(j.get<std::string>());
}

inline std::string format_float(const Float &x, unsigned precision_bits) {
  return to_decimal(x, Precision{precision_bits}.decimal_digits());
}

inline Json to_json(const VerificationReport &r) {
  Json j;
  j["spec"] = to_json(r.spec);
  if (r.error) {
    j["error"] = std::string(to_string(*r.error));
    j["reason"] = r.reason;
  } else {
    j["closed"] = to_string(r.closed);
    j["oracle"] = format_float(r.oracle, r.precision_bits);
    j["abs_error"] = format_float(r.abs_error, r.precision_bits);
  }
  j["precision_bits"] = r.precision_bits;
  j["passed"] = r.passed;
  return j;
}

inline std::string csv_header() { return "family,N,l,m,closed,oracle,abs_error,precision_bits,passed"; }

inline std::string to_csv_row(const VerificationReport &r) {
  std::ostringstream out;
  out << family_name(r.spec.family) << ',' << r.spec.N << ',' << r.spec.l << ',' << r.spec.m << ',';
  if (r.error)
    out << to_string(*r.error) << ",,";
  else
    out << to_string(r.closed) << ',' << format_float(r.oracle, r.precision_bits) << ','
        << format_float(r.abs_error, r.precision_bits);
  out << ',' << r.precision_bits << ',' << (r.passed ? "true" : "false");
  return out.str();
}

inline std::string describe(const SumSpec &spec) {
  std::ostringstream out;
  out << family_name(spec.family) << " N=" << spec.N;
  if (uses_l(spec.family))
    out << " l=" << spec.l;
  if (uses_m(spec.family))
    out << " m=" << spec.m;
  return out.str();
}

inline std::string to_text(const VerificationReport &r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << describe(r.spec);
  if (r.error)
    out << " error=" << r.reason;
  else
    out << " closed=" << to_string(r.closed) << " oracle=" << format_float(r.oracle, r.precision_bits)
        << " abs_error=" << format_float(r.abs_error, r.precision_bits);
  return out.str();
}

} // namespace trigsum
