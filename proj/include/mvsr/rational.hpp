#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mvsr {

/// Arbitrary-precision integer and always-reduced rational.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);
/// Parses "p", "-p" or "p/q"; throws Error(ParseError).
Rational parse_rational(const std::string& text);

}  // namespace mvsr
