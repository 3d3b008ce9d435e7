#ifndef TREEEMBED_ASYMPTOTICS_HPP
#define TREEEMBED_ASYMPTOTICS_HPP

#include <cstddef>

#include "treeembed/family_id.hpp"
#include "treeembed/numbers.hpp"
#include "treeembed/tree.hpp"

namespace treeembed {

/// Singular data of the non-plane binary tree function V(z):
/// V(z) ~ 1/rho - b sqrt(1 - z/rho) near rho, and the internal-node
/// function N(x) ~ 1/sigma - a sqrt(1 - x/sigma) with V(z) = z N(z^2).
struct NonplaneConstants {
  double rho = 0;
  double b = 0;
  double sigma = 0;
  double a_const = 0;
  // |F| and |dF/dV| at (rho, 1/rho) for F(z, V) = z + z/2 (V^2 + V(z^2)) - V.
  double residual_f = 0;
  double residual_fv = 0;
  int iterations = 0;
};

/// Newton on the characteristic system, in 50-digit binary floating point.
/// V(z^2) and its derivative come from a truncated series of order
/// `series_order`; the tail at z^2 = sigma is far below double precision.
/// Throws DomainError for digits outside [1, 30] and NumericError when the
/// iteration does not reach 10^-digits.
NonplaneConstants solve_nonplane_constants(int digits = 25, std::size_t series_order = 480);

/// Shared, lazily computed copy of solve_nonplane_constants().
const NonplaneConstants& nonplane_constants();

enum class CountKind { all, good };
enum class Parity { odd_only, all_n };

/// Leading-order estimate K * beta^n * n^alpha.
struct AsymEstimate {
  double K = 0;
  double beta = 0;
  double alpha = 0;
  Parity parity = Parity::all_n;

  bool admissible(std::size_t n) const noexcept { return parity == Parity::all_n || n % 2 == 1; }
  /// Natural log of the estimate. Only meaningful for admissible n.
  double log_value(std::size_t n) const;
  /// The estimate itself; 0 for inadmissible n. Overflows to inf for
  /// large n in the planted family, use log_value there.
  double value(std::size_t n) const;
};

/// Leading asymptotics of a_n(S) or g_n(S) in the given family.
AsymEstimate asym_count(const PlaneTree& s, Family fam, CountKind kind);
/// Forest version: all-embeddings only, binary families only.
AsymEstimate asym_count(const PlaneForest& f, Family fam, CountKind kind = CountKind::all);

/// Limit of sqrt(n) g_n / a_n. When k = (m + l - 2)/2 is zero (the single
/// node) g_n / a_n is exactly 1/n and `one_over_n` is set instead.
struct RatioLimit {
  Rational k;
  bool one_over_n = false;
  double value = 0;
};
RatioLimit ratio_coefficient(const PlaneTree& s, Family fam);

/// x^{1-s} < Gamma(x+1)/Gamma(x+s) < (x+1)^{1-s}, checked with slack 1e-10.
/// Throws DomainError unless x > 0 and 0 < s < 1.
bool gautschi_check(double x, double s);

/// Gamma(k + 1/2) / Gamma(k), the k-dependent part of every ratio limit.
double gamma_ratio_half(double k);

struct PatternComparison {
  bool comparable = false;  // s1 embeds into s2 in the family's mode
  RatioLimit limit1;
  RatioLimit limit2;
  bool ordered = false;  // limit1 <= limit2, with 1/n below every constant
};
PatternComparison compare_patterns(const PlaneTree& s1, const PlaneTree& s2, Family fam);

}  // namespace treeembed

#endif  // TREEEMBED_ASYMPTOTICS_HPP
