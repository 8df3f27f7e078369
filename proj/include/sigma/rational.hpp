#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sigma {

// Expression templates off: values behave like plain arithmetic types.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den < 0) num = -num, den = -den;  // cpp_rational rejects a negative denominator
  return Rational(num, den);
}

/// Exact value of a binary64 number.
Rational rational_from_double(double x);

/// Parses "p", "p/q", or a finite decimal such as "-1.25".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

Integer floor(const Rational& q);

}  // namespace sigma
