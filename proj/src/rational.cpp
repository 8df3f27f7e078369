#include "sigma/rational.hpp"

#include "sigma/error.hpp"

#include <cmath>

namespace sigma {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidInput, "non-finite number");
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational q(scaled);
  exponent -= 53;
  const Integer two_pow = Integer(1) << std::abs(exponent);
  return exponent >= 0 ? q * Rational(two_pow) : q / Rational(two_pow);
}

namespace {

// cpp_int's string constructor reads a leading 0 as an octal prefix.
Integer parse_decimal_integer(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size()) throw Error(ErrorCode::InvalidInput, "missing digits in '" + text + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw Error(ErrorCode::InvalidInput, "not a decimal integer: '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty number");
  {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Integer num = parse_decimal_integer(text.substr(0, slash));
      const Integer den = parse_decimal_integer(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
      return Rational(num) / Rational(den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
      const Integer num = parse_decimal_integer(digits);
      Integer den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(parse_decimal_integer(text));
  }
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer floor(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

}  // namespace sigma
