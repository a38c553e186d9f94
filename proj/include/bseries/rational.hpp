#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bseries {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" (optional leading '-', q > 0).
Rational parse_rational(std::string_view text);

// "p/q" with q > 0, or plain "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Int& value);

// exponent >= 0
Rational rational_pow(const Rational& base, int exponent);

Int factorial(int n);

}  // namespace bseries
