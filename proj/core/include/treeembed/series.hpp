#ifndef TREEEMBED_SERIES_HPP
#define TREEEMBED_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "treeembed/errors.hpp"
#include "treeembed/numbers.hpp"

namespace treeembed {

/// Power series in z truncated after z^N, with exact coefficients
/// (BigInt or Rational). All arithmetic is exact through the truncation
/// order; binary operations require equal orders.
template <class Coeff>
class Series {
 public:
  using coefficient_type = Coeff;

  /// The zero series of order N.
  explicit Series(std::size_t order) : c_(order + 1, Coeff(0)) {}
  Series(std::size_t order, std::initializer_list<long> leading) : Series(order) {
    std::size_t i = 0;
    for (long v : leading) {
      if (i > order) break;
      c_[i++] = v;
    }
  }

  static Series constant(std::size_t order, const Coeff& value) {
    Series s(order);
    s.c_[0] = value;
    return s;
  }
  /// z^k (zero if k exceeds the order).
  static Series monomial(std::size_t order, std::size_t k, const Coeff& value = Coeff(1)) {
    Series s(order);
    if (k <= order) s.c_[k] = value;
    return s;
  }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Coeff& operator[](std::size_t n) const { return c_[n]; }
  Coeff& operator[](std::size_t n) { return c_[n]; }
  /// [z^n], zero beyond the stored range is not inferred: n must be <= order.
  const Coeff& coefficient(std::size_t n) const {
    if (n > order()) throw DomainError("coefficient index beyond truncation order");
    return c_[n];
  }
  const std::vector<Coeff>& coefficients() const noexcept { return c_; }

  Series& operator+=(const Series& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Series& operator*=(const Coeff& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Series operator*(Series a, const Coeff& k) { return a *= k; }
  friend Series operator*(const Coeff& k, Series a) { return a *= k; }

  /// Truncated Cauchy product.
  friend Series operator*(const Series& a, const Series& b) {
    a.check_order(b);
    const std::size_t n = a.order();
    Series out(n);
    const std::size_t lo_a = a.valuation(), lo_b = b.valuation();
    for (std::size_t i = lo_a; i <= n; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = lo_b; i + j <= n; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        if constexpr (std::is_same_v<Coeff, BigInt>) {
          mpz_addmul(out.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        } else {
          out.c_[i + j] += a.c_[i] * b.c_[j];
        }
      }
    }
    return out;
  }

  friend bool operator==(const Series&, const Series&) = default;

  /// Index of the first non-zero coefficient (order + 1 for the zero series).
  std::size_t valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) != 0) return i;
    }
    return c_.size();
  }

  /// Multiplication by z^k.
  Series shift(std::size_t k) const {
    Series out(order());
    for (std::size_t i = 0; i + k <= order(); ++i) out.c_[i + k] = c_[i];
    return out;
  }

  /// d/dz. The top coefficient of the result is not determined by the
  /// truncated input and is left at zero; pointed() has no such gap.
  Series derivative() const {
    Series out(order());
    for (std::size_t i = 1; i <= order(); ++i) out.c_[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return out;
  }

  /// z * d/dz, exact through the truncation order.
  Series pointed() const {
    Series out(order());
    for (std::size_t i = 1; i <= order(); ++i) out.c_[i] = c_[i] * static_cast<unsigned long>(i);
    return out;
  }

  /// f(z^2).
  Series substitute_square() const {
    Series out(order());
    for (std::size_t i = 0; 2 * i <= order(); ++i) out.c_[2 * i] = c_[i];
    return out;
  }

  /// Non-negative integer power by repeated squaring.
  Series pow(unsigned exponent) const {
    Series result = constant(order(), Coeff(1));
    Series base = *this;
    while (exponent) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1;
      if (exponent) base = base * base;
    }
    return result;
  }

  /// Multiplicative inverse of a unit series (constant term +-1 for
  /// integers, non-zero for rationals) by Newton iteration
  /// g <- g (2 - f g), doubling the number of correct terms each step.
  Series reciprocal() const {
    const Coeff& c0 = c_[0];
    if (sgn(c0) == 0) throw DomainError("reciprocal: series is not a unit");
    Coeff inv0;
    if constexpr (std::is_same_v<Coeff, BigInt>) {
      if (c0 != 1 && c0 != -1) throw DomainError("reciprocal: integer series needs constant term +-1");
      inv0 = c0;
    } else {
      inv0 = Coeff(1) / c0;
    }
    std::size_t known = 1;  // coefficients [0, known) are correct
    Series g = constant(order(), inv0);
    while (known <= order()) {
      known = std::min(2 * known, order() + 1);
      const std::size_t sub = known - 1;
      Series f = truncated(sub), gg = g.truncated(sub);
      Series two_minus = constant(sub, Coeff(2)) - f * gg;
      g = (gg * two_minus).extended(order());
    }
    return g;
  }

  /// Same coefficients with a smaller (or equal) truncation order.
  Series truncated(std::size_t new_order) const {
    Series out(new_order);
    for (std::size_t i = 0; i <= std::min(new_order, order()); ++i) out.c_[i] = c_[i];
    return out;
  }
  /// Zero-padded to a larger order; the padded coefficients are not known.
  Series extended(std::size_t new_order) const {
    Series out(new_order);
    for (std::size_t i = 0; i <= std::min(new_order, order()); ++i) out.c_[i] = c_[i];
    return out;
  }

  /// Exact division of every coefficient by d; throws if any is not
  /// divisible (integer series only).
  Series divided_exactly(unsigned long d) const {
    Series out = *this;
    for (auto& x : out.c_) {
      if constexpr (std::is_same_v<Coeff, BigInt>) {
        if (!mpz_divisible_ui_p(x.get_mpz_t(), d)) {
          throw std::logic_error("divided_exactly: non-integral coefficient");
        }
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), d);
      } else {
        x /= d;
      }
    }
    return out;
  }

 private:
  void check_order(const Series& o) const {
    if (o.order() != order()) throw DomainError("series truncation orders differ");
  }

  std::vector<Coeff> c_;
};

using IntSeries = Series<BigInt>;
using RationalSeries = Series<Rational>;

/// Exact conversion to rational coefficients.
RationalSeries to_rational(const IntSeries& s);
/// Exact conversion back; throws std::logic_error on any non-integral
/// coefficient.
IntSeries to_integer(const RationalSeries& s);

}  // namespace treeembed

#endif  // TREEEMBED_SERIES_HPP
