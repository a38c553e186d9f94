#include "bseries/rational.hpp"

#include "bseries/errors.hpp"

namespace bseries {

namespace {

bool is_integer_token(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text =
      slash == std::string_view::npos ? text : text.substr(0, slash);
  if (!is_integer_token(num_text)) {
    throw FormatError("invalid rational '" + std::string(text) + "'");
  }
  const Int numerator{std::string(num_text)};
  if (slash == std::string_view::npos) return Rational(numerator);

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_integer_token(den_text) || den_text.front() == '-') {
    throw FormatError("invalid rational '" + std::string(text) +
                      "': denominator must be a positive integer");
  }
  const Int denominator{std::string(den_text)};
  if (denominator == 0) {
    throw FormatError("invalid rational '" + std::string(text) +
                      "': zero denominator");
  }
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Int& value) { return value.str(); }

Rational rational_pow(const Rational& base, int exponent) {
  Rational result = 1;
  Rational factor = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= factor;
    e >>= 1;
    if (e > 0) factor *= factor;
  }
  return result;
}

Int factorial(int n) {
  Int result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace bseries
