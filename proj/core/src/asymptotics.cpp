#include "treeembed/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "treeembed/errors.hpp"
#include "treeembed/generating.hpp"
#include "treeembed/oracle.hpp"

namespace treeembed {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

// W(x) = V(x^2) and W'(x) from the truncated V series, by Horner in x^2.
struct SquareSubstituted {
  std::vector<Real> v;  // v[j] = [z^j] V

  void eval(const Real& x, Real& w, Real& dw) const {
    const Real y = x * x;
    Real acc = 0, dacc = 0;
    for (std::size_t j = v.size(); j-- > 1;) {
      dacc = dacc * y + Real(j) * v[j];
      acc = acc * y + v[j];
    }
    w = acc * y;                  // sum v_j y^j
    dw = 2 * x * dacc;            // d/dx sum v_j x^{2j}
  }
};

double lgamma_checked(double x) {
  if (!(x > 0)) throw DomainError("Gamma argument must be positive, got " + std::to_string(x));
  return std::lgamma(x);
}

struct Shape {
  double m = 0;
  double l = 0;
  bool single_node = false;
};

Shape shape_of(const PlaneTree& s) {
  const DegreeSequence d = degree_sequence(s);
  return {static_cast<double>(d.m), static_cast<double>(d.l), d.m == 1};
}

}  // namespace

NonplaneConstants solve_nonplane_constants(int digits, std::size_t series_order) {
  if (digits < 1 || digits > 30) throw DomainError("precision must be between 1 and 30 digits");
  if (series_order < 50) throw DomainError("series order too small for the V(z^2) evaluation");

  SquareSubstituted w_of;
  const IntSeries v = series_V(series_order);
  w_of.v.reserve(v.order() + 1);
  for (std::size_t j = 0; j <= v.order(); ++j) w_of.v.emplace_back(v[j].get_str());

  // Eliminating V = 1/z from {F = 0, zV = 1} leaves 2z^2 - 1 + z^2 W(z) = 0.
  const Real tol = boost::multiprecision::pow(Real(10), -(digits + 2));
  Real z = 0.6;
  Real w, dw;
  int it = 0;
  for (; it < 100; ++it) {
    w_of.eval(z, w, dw);
    const Real g = 2 * z * z - 1 + z * z * w;
    const Real dg = 4 * z + 2 * z * w + z * z * dw;
    const Real step = g / dg;
    z -= step;
    if (boost::multiprecision::abs(step) < tol) break;
  }
  w_of.eval(z, w, dw);
  const Real vv = 1 / z;
  const Real f = z + z / 2 * (vv * vv + w) - vv;
  const Real fv = z * vv - 1;
  if (it == 100 || boost::multiprecision::abs(f) > tol * 100) {
    throw NumericError("non-plane constants: Newton did not converge (|F| = " +
                       boost::multiprecision::abs(f).str(5) + ", iterations " + std::to_string(it) + ")");
  }

  // V(z) = 1/rho - sqrt(2 F_z / F_VV) sqrt(rho - z) + ..., so the amplitude
  // in the variable (1 - z/rho) picks up a factor sqrt(rho).
  const Real fz = 1 + (vv * vv + w) / 2 + z * dw / 2;
  const Real fvv = z;
  const Real b = boost::multiprecision::sqrt(2 * z * fz / fvv);

  NonplaneConstants c;
  c.rho = static_cast<double>(z);
  c.b = static_cast<double>(b);
  c.sigma = static_cast<double>(z * z);
  c.a_const = static_cast<double>(b / boost::multiprecision::sqrt(2 * z * z));
  c.residual_f = static_cast<double>(boost::multiprecision::abs(f));
  c.residual_fv = static_cast<double>(boost::multiprecision::abs(fv));
  c.iterations = it + 1;
  return c;
}

const NonplaneConstants& nonplane_constants() {
  static const NonplaneConstants constants = solve_nonplane_constants();
  return constants;
}

double AsymEstimate::log_value(std::size_t n) const {
  const double x = static_cast<double>(n);
  return std::log(K) + x * std::log(beta) + alpha * std::log(x);
}

double AsymEstimate::value(std::size_t n) const {
  if (n == 0 || !admissible(n)) return 0.0;
  return std::exp(log_value(n));
}

AsymEstimate asym_count(const PlaneTree& s, Family fam, CountKind kind) {
  const DegreeSequence d = degree_sequence(s);
  const Shape sh = shape_of(s);
  const double ml = sh.m + sh.l;
  const bool good = kind == CountKind::good;
  const double sqrt_pi = std::sqrt(std::numbers::pi);

  AsymEstimate e;
  // g_n(single node) is the family size itself, n^{-3/2} rather than n^{-1}.
  e.alpha = !good ? (ml - 3) / 2 : sh.single_node ? -1.5 : (ml - 4) / 2;
  e.parity = is_binary(fam) ? Parity::odd_only : Parity::all_n;

  switch (fam) {
    case Family::plane_binary: {
      e.beta = 2;
      const double c = binary_expansion_constant(d, fam).get_d();
      if (good && sh.single_node) {
        e.K = std::sqrt(2.0) / sqrt_pi;
      } else if (good) {
        e.K = c * std::exp2((6 - sh.m - 3 * sh.l) / 2) / std::exp(lgamma_checked((ml - 2) / 2));
      } else {
        e.K = c * std::exp2((5 - sh.m - 3 * sh.l) / 2) / std::exp(lgamma_checked((ml - 1) / 2));
      }
      break;
    }
    case Family::nonplane_binary: {
      const NonplaneConstants& nc = nonplane_constants();
      e.beta = 1 / nc.rho;
      const double c_s = motzkin_expansions(s).c_s.get_d();
      if (good && sh.single_node) {
        e.K = nc.b / sqrt_pi;
      } else if (good) {
        e.K = 2 * c_s * std::pow(nc.b, -(ml - 2)) * std::pow(nc.rho, -(ml - 1)) /
              std::exp(lgamma_checked((ml - 2) / 2));
      } else {
        e.K = 2 * c_s * std::pow(nc.b, -(ml - 1)) * std::pow(nc.rho, -ml) /
              std::exp(lgamma_checked((ml - 1) / 2));
      }
      break;
    }
    case Family::planted_plane: {
      e.beta = 4;
      const double c = binary_expansion_constant(d, fam).get_d();
      if (good && sh.single_node) {
        e.K = 0.25 / sqrt_pi;
      } else if (good) {
        e.K = 2 * c * std::exp2(-ml) / std::exp(lgamma_checked((ml - 2) / 2));
      } else {
        e.K = c * std::exp2(-ml) / std::exp(lgamma_checked((ml - 1) / 2));
      }
      break;
    }
  }
  return e;
}

AsymEstimate asym_count(const PlaneForest& f, Family fam, CountKind kind) {
  if (f.components.size() == 1) return asym_count(f.components.front(), fam, kind);
  if (kind == CountKind::good) throw DomainError("a forest has no good embeddings to estimate");
  switch (fam) {
    case Family::plane_binary: {
      const auto orderings = forest_orderings(f);
      AsymEstimate e = asym_count(orderings.front(), fam, CountKind::good);
      e.K *= static_cast<double>(orderings.size());
      return e;
    }
    case Family::nonplane_binary:
      return asym_count(clip_forest_nonplane(f), fam, CountKind::good);
    case Family::planted_plane:
      break;
  }
  throw UnsupportedError("forest patterns are only defined for the binary families");
}

double gamma_ratio_half(double k) { return std::exp(lgamma_checked(k + 0.5) - lgamma_checked(k)); }

RatioLimit ratio_coefficient(const PlaneTree& s, Family fam) {
  RatioLimit r;
  r.k = degree_sequence(s).k_param();
  if (sgn(r.k) == 0) {
    r.one_over_n = true;
    return r;
  }
  const double g = gamma_ratio_half(r.k.get_d());
  switch (fam) {
    case Family::plane_binary:
      r.value = g * std::sqrt(2.0);
      break;
    case Family::nonplane_binary:
      r.value = g * nonplane_constants().b * nonplane_constants().rho;
      break;
    case Family::planted_plane:
      r.value = 2 * g;
      break;
  }
  return r;
}

bool gautschi_check(double x, double s) {
  if (!(x > 0) || !(s > 0 && s < 1)) throw DomainError("Gautschi inequality needs x > 0 and 0 < s < 1");
  const double mid = std::exp(std::lgamma(x + 1) - std::lgamma(x + s));
  const double lo = std::pow(x, 1 - s);
  const double hi = std::pow(x + 1, 1 - s);
  constexpr double slack = 1e-10;
  return lo < mid + slack && mid < hi + slack;
}

PatternComparison compare_patterns(const PlaneTree& s1, const PlaneTree& s2, Family fam) {
  PatternComparison c;
  c.comparable = is_subposet(s1, s2, mode_for(fam));
  c.limit1 = ratio_coefficient(s1, fam);
  c.limit2 = ratio_coefficient(s2, fam);
  if (c.limit1.one_over_n) {
    c.ordered = true;
  } else if (c.limit2.one_over_n) {
    c.ordered = false;
  } else {
    c.ordered = c.limit1.value <= c.limit2.value * (1 + 1e-12);
  }
  return c;
}

}  // namespace treeembed
