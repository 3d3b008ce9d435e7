#ifndef TREEEMBED_NUMBERS_HPP
#define TREEEMBED_NUMBERS_HPP

#include <cstdint>

#include <gmpxx.h>

namespace treeembed {

using BigInt = mpz_class;
using Rational = mpq_class;

/// k-th Catalan number, binom(2k, k) / (k + 1).
BigInt catalan(std::uint64_t k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// Natural logarithm of a positive big integer, accurate to double precision
/// even when the value overflows a double.
double log_abs(const BigInt& x);

}  // namespace treeembed

#endif  // TREEEMBED_NUMBERS_HPP
