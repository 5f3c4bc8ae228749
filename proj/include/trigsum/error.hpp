#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigsum {

enum class errc {
  non_rational_value,
  window_exceeded,
  zero_leading_coefficient,
  out_of_validity_range,
  argument_out_of_range,
  parity_violation,
  non_integer_result,
  unsupported_genus,
  singular_sample_point,
  coordinate_out_of_range,
  disconnected_graph,
  same_node,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
  case errc::non_rational_value: return "NonRationalValue";
  case errc::window_exceeded: return "WindowExceeded";
  case errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
  case errc::out_of_validity_range: return "OutOfValidityRange";
  case errc::argument_out_of_range: return "ArgumentOutOfRange";
  case errc::parity_violation: return "ParityViolation";
  case errc::non_integer_result: return "NonIntegerResult";
  case errc::unsupported_genus: return "UnsupportedGenus";
  case errc::singular_sample_point: return "SingularSamplePoint";
  case errc::coordinate_out_of_range: return "CoordinateOutOfRange";
  case errc::disconnected_graph: return "DisconnectedGraph";
  case errc::same_node: return "SameNode";
  case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
  error(errc code, const std::string &detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &detail) {
  throw error(code, detail);
}

inline void require(bool condition, errc code, const std::string &detail) {
  if (!condition)
    fail(code, detail);
}

} // namespace trigsum
