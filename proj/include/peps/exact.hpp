#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace peps {

/// Exact arbitrary-precision integer. All counting statistics are valued here.
using ExactInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms. Used for expansion coefficients
/// and expected values.
using ExactRational = boost::multiprecision::cpp_rational;

ExactInt factorial(int n);

/// Binomial coefficient with the polynomial convention in the upper argument:
/// C(x, k) = x(x-1)...(x-k+1) / k! for k >= 0, and 0 for k < 0. Valid for
/// negative x, e.g. C(-1, 2) = 1.
ExactInt binomial(const ExactInt& x, int k);

ExactInt int_pow(ExactInt base, int exp);

/// Decimal string; rationals render as "a/b" when the denominator is not 1.
std::string to_decimal(const ExactInt& v);
std::string to_decimal(const ExactRational& v);

}  // namespace peps
