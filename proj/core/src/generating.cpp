#include "treeembed/generating.hpp"

#include <utility>
#include <vector>

namespace treeembed {

namespace {

// Sum_{i+j=n} a_i a_j over already computed coefficients 1..n-1.
BigInt self_convolution(const IntSeries& a, std::size_t n) {
  BigInt acc = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (sgn(a[i]) == 0 || sgn(a[n - i]) == 0) continue;
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), a[n - i].get_mpz_t());
  }
  return acc;
}

IntSeries one_minus(const IntSeries& s) { return IntSeries::constant(s.order(), BigInt(1)) - s; }

}  // namespace

IntSeries series_B(std::size_t order) {
  IntSeries b(order);
  if (order >= 1) b[1] = 1;
  for (std::size_t n = 3; n <= order; n += 2) b[n] = self_convolution(b, n - 1);
  return b;
}

IntSeries series_V(std::size_t order) {
  IntSeries v(order);
  if (order >= 1) v[1] = 1;
  for (std::size_t n = 3; n <= order; n += 2) {
    BigInt twice = self_convolution(v, n - 1);
    if ((n - 1) % 2 == 0) twice += v[(n - 1) / 2];
    if (!mpz_divisible_2exp_p(twice.get_mpz_t(), 1)) throw std::logic_error("series_V: odd numerator");
    mpz_divexact_ui(v[n].get_mpz_t(), twice.get_mpz_t(), 2);
  }
  return v;
}

IntSeries series_T(std::size_t order) {
  IntSeries t(order);
  if (order >= 1) t[1] = 1;
  for (std::size_t n = 2; n <= order; ++n) t[n] = self_convolution(t, n);
  return t;
}

// ---------------------------------------------------------------------------

PlaneBinaryGF::PlaneBinaryGF(std::size_t order)
    : order_(order),
      b_(series_B(order)),
      one_minus_2zb_(one_minus(b_.shift(1) * BigInt(2))),
      path_(one_minus_2zb_.reciprocal()) {}

IntSeries PlaneBinaryGF::all(const DegreeSequence& d) const {
  IntSeries a = path_.pow(static_cast<unsigned>(d.m + d.l - 1));
  a = a * b_.pow(static_cast<unsigned>(d.l + d.u));
  a = a.shift(d.l + d.u - 1);
  BigInt scale = binary_expansion_constant(d, Family::plane_binary);
  scale <<= d.u;
  return a * scale;
}

IntSeries PlaneBinaryGF::all(const PlaneTree& s) const { return all(degree_sequence(s)); }

IntSeries PlaneBinaryGF::good(const PlaneTree& s) const { return one_minus_2zb_ * all(s); }

IntSeries PlaneBinaryGF::good(const DegreeSequence& d) const { return one_minus_2zb_ * all(d); }

IntSeries PlaneBinaryGF::forest(const PlaneForest& f) const {
  IntSeries total(order_);
  for (const auto& t : forest_orderings(f)) total += good(t);
  return total;
}

// ---------------------------------------------------------------------------

NonplaneBinaryGF::NonplaneBinaryGF(std::size_t order)
    : order_(order),
      v_(series_V(order)),
      one_minus_zv_(one_minus(v_.shift(1))),
      path_(one_minus_zv_.reciprocal()) {}

const IntSeries& NonplaneBinaryGF::all_canonical(const PlaneTree& t) {
  const std::string key = format_tree(t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  IntSeries a(order_);
  const auto& kids = t.children();
  switch (t.out_degree()) {
    case 0:
      a = v_ * path_;
      break;
    case 1:
      a = v_.shift(1) * path_ * all_canonical(kids[0]);
      break;
    case 2: {
      const IntSeries split = (path_ * path_).shift(1);
      if (format_tree(kids[0]) == format_tree(kids[1])) {
        const IntSeries& half = all_canonical(kids[0]);
        a = split * (half * half + half.substitute_square()).divided_exactly(2);
      } else {
        IntSeries left = all_canonical(kids[0]);
        a = split * left * all_canonical(kids[1]);
      }
      break;
    }
    default:
      throw UnsupportedError("exact non-plane series need a Motzkin pattern; node of out-degree " +
                             std::to_string(t.out_degree()) + " found (use the oracle or asymptotics)");
  }
  return memo_.emplace(key, std::move(a)).first->second;
}

IntSeries NonplaneBinaryGF::all(const PlaneTree& s) {
  if (!is_motzkin(s)) {
    throw UnsupportedError("exact non-plane series need a Motzkin pattern (out-degrees <= 2); "
                           "use the oracle or asymptotics");
  }
  return all_canonical(canonical_nonplane(s));
}

IntSeries NonplaneBinaryGF::good(const PlaneTree& s) { return one_minus_zv_ * all(s); }

IntSeries NonplaneBinaryGF::forest(const PlaneForest& f) { return good(clip_forest_nonplane(f)); }

// ---------------------------------------------------------------------------

PlantedPlaneGF::PlantedPlaneGF(std::size_t order)
    : order_(order),
      t_(series_T(order)),
      one_minus_t_(one_minus(t_)),
      one_minus_2t_(one_minus(t_ * BigInt(2))),
      inv_one_minus_t_(one_minus_t_.reciprocal()),
      inv_one_minus_2t_(one_minus_2t_.reciprocal()),
      good_factor_(one_minus_2t_ * inv_one_minus_t_) {}

IntSeries PlantedPlaneGF::all(const PlaneTree& s) {
  const std::string key = format_tree(s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const auto& kids = s.children();
  const std::size_t k = kids.size();
  auto group = [&](std::size_t from, std::size_t to) {  // A of root over kids[from..to]
    return all(PlaneTree(std::vector<PlaneTree>(kids.begin() + static_cast<long>(from),
                                                kids.begin() + static_cast<long>(to) + 1)));
  };

  IntSeries a(order_);
  if (k == 0) {
    a = t_ * one_minus_t_ * inv_one_minus_2t_;
  } else if (k == 1) {
    a = t_ * inv_one_minus_2t_ * all(kids[0]);
  } else if (k == 2) {
    a = t_ * inv_one_minus_2t_ * inv_one_minus_2t_;
    a = a * all(kids[0]) * all(kids[1]);
  } else {
    IntSeries outer = all(kids[0]) * group(1, k - 1);
    outer += t_ * inv_one_minus_t_ * group(0, k - 2) * all(kids[k - 1]);
    a = inv_one_minus_2t_ * outer;
    if (k >= 4) {
      IntSeries middle(order_);
      for (std::size_t i = 1; i + 2 < k; ++i) middle += group(0, i) * group(i + 1, k - 1);
      a += inv_one_minus_t_ * middle;
    }
  }
  return memo_.emplace(key, std::move(a)).first->second;
}

IntSeries PlantedPlaneGF::good(const PlaneTree& s) { return good_factor_ * all(s); }

const IntSeries& PlantedPlaneGF::node_factor(std::size_t k) {
  while (factors_.size() <= k) {
    const std::size_t j = factors_.size();
    IntSeries f(order_);
    if (j == 0) {
      f = t_ * one_minus_t_ * inv_one_minus_2t_;
    } else if (j == 1) {
      f = t_ * inv_one_minus_2t_;
    } else if (j == 2) {
      f = t_ * inv_one_minus_2t_ * inv_one_minus_2t_;
    } else {
      IntSeries mid(order_);
      for (std::size_t i = 2; i + 2 <= j; ++i) mid += factors_[i] * factors_[j - i];
      f = inv_one_minus_t_ * (factors_[j - 1] * inv_one_minus_2t_ + mid);
    }
    factors_.push_back(std::move(f));
  }
  return factors_[k];
}

IntSeries PlantedPlaneGF::all(const DegreeSequence& d) {
  IntSeries a = IntSeries::constant(order_, BigInt(1));
  for (std::size_t k = 0; k < d.d.size(); ++k) {
    if (d.d[k] > 0) a = a * node_factor(k).pow(static_cast<unsigned>(d.d[k]));
  }
  return a;
}

IntSeries PlantedPlaneGF::good(const DegreeSequence& d) { return good_factor_ * all(d); }

// ---------------------------------------------------------------------------

IntSeries series_A_plane_binary(const PlaneTree& s, std::size_t order) {
  return PlaneBinaryGF(order).all(s);
}
IntSeries series_G_plane_binary(const PlaneTree& s, std::size_t order) {
  return PlaneBinaryGF(order).good(s);
}
IntSeries series_A_nonplane_motzkin(const PlaneTree& s, std::size_t order) {
  return NonplaneBinaryGF(order).all(s);
}
IntSeries series_G_nonplane_motzkin(const PlaneTree& s, std::size_t order) {
  return NonplaneBinaryGF(order).good(s);
}
IntSeries series_A_planted_plane(const PlaneTree& s, std::size_t order) {
  return PlantedPlaneGF(order).all(s);
}
IntSeries series_G_planted_plane(const PlaneTree& s, std::size_t order) {
  return PlantedPlaneGF(order).good(s);
}
IntSeries series_forest_plane_binary(const PlaneForest& f, std::size_t order) {
  return PlaneBinaryGF(order).forest(f);
}
IntSeries series_forest_nonplane(const PlaneForest& f, std::size_t order) {
  return NonplaneBinaryGF(order).forest(f);
}

bool series_supported(const PlaneTree& s, Family fam) {
  return fam != Family::nonplane_binary || is_motzkin(s);
}

SeriesPair embedding_series(const PlaneTree& s, Family fam, std::size_t order) {
  switch (fam) {
    case Family::plane_binary: {
      PlaneBinaryGF gf(order);
      return {gf.all(s), gf.good(s)};
    }
    case Family::nonplane_binary: {
      NonplaneBinaryGF gf(order);
      return {gf.all(s), gf.good(s)};
    }
    case Family::planted_plane: {
      PlantedPlaneGF gf(order);
      return {gf.all(s), gf.good(s)};
    }
  }
  throw DomainError("unknown family");
}

}  // namespace treeembed
