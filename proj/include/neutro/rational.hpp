#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace neutro {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders a rational as a terminating decimal when the denominator allows it
/// ("0.5", "-12", "0.125"), otherwise as "p/q".
std::string format_rational(const Rational& value);

/// Parses an unsigned decimal ("12", "0.3", ".3", "4.") or fraction ("1/3").
/// `offset` is added to reported error positions.
Rational parse_unsigned_rational(std::string_view text, std::size_t offset = 0);

/// Signed variant of parse_unsigned_rational; accepts one leading '-' or '+'.
Rational parse_rational(std::string_view text, std::size_t offset = 0);

}  // namespace neutro
