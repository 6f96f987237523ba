#include "peps/exact.hpp"

#include <stdexcept>

namespace peps {

ExactInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  ExactInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

ExactInt binomial(const ExactInt& x, int k) {
  if (k < 0) return 0;
  ExactInt num = 1;
  for (int i = 0; i < k; ++i) num *= x - i;
  return num / factorial(k);
}

ExactInt int_pow(ExactInt base, int exp) {
  if (exp < 0) throw std::invalid_argument("int_pow with negative exponent");
  ExactInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

std::string to_decimal(const ExactInt& v) { return v.str(); }

std::string to_decimal(const ExactRational& v) { return v.str(); }

}  // namespace peps
