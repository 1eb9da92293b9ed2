#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmetric {

/// Arbitrary-precision exact rational. Impacts, areas and efficiencies stay
/// exact until the report renders them.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "12", "0.75", "-3.5", "7/10". No exponents.
std::optional<Rational> parse_decimal(std::string_view text);

/// Round-half-up (toward +inf on ties) to `places` decimals.
Rational round_half_up(const Rational& value, int places);

/// Fixed-point rendering after round_half_up, e.g. "15.01".
std::string to_fixed(const Rational& value, int places);

double to_double(const Rational& value);

}  // namespace qmetric

namespace qmetric {

/// Exact rendering: a terminating decimal when one exists ("0.125"),
/// otherwise "num/den".
std::string to_exact_string(const Rational& value);

}  // namespace qmetric
