#include "treeembed/numbers.hpp"

#include <cmath>

#include "treeembed/errors.hpp"

namespace treeembed {

BigInt catalan(std::uint64_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), 2 * k, k);
  result /= (k + 1);
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

double log_abs(const BigInt& x) {
  if (sgn(x) == 0) throw DomainError("log_abs: zero argument");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace treeembed
