#ifndef TREEEMBED_GENERATING_HPP
#define TREEEMBED_GENERATING_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "treeembed/family_id.hpp"
#include "treeembed/series.hpp"
#include "treeembed/tree.hpp"

namespace treeembed {

/// B(z) = z + z B(z)^2, plane binary trees by nodes.
IntSeries series_B(std::size_t order);
/// V(z) = z + (z/2)(V(z)^2 + V(z^2)), non-plane binary trees by nodes.
IntSeries series_V(std::size_t order);
/// T(z) = z / (1 - T(z)), planted plane trees by nodes.
IntSeries series_T(std::size_t order);

/// Embedding generating functions for plane binary hosts. The all-series
/// depends only on the degree sequence of the pattern:
///   A = (1 - 2zB)^{-(m+l-1)} z^{l+u-1} B^{l+u} 2^u prod Catalan(i-1)^{d_i}
/// and G = (1 - 2zB) A.
class PlaneBinaryGF {
 public:
  explicit PlaneBinaryGF(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  IntSeries all(const PlaneTree& s) const;
  IntSeries all(const DegreeSequence& d) const;
  IntSeries good(const PlaneTree& s) const;
  IntSeries good(const DegreeSequence& d) const;
  /// Sum of good series over the distinct component orders (r >= 2).
  IntSeries forest(const PlaneForest& f) const;

 private:
  std::size_t order_;
  IntSeries b_;
  IntSeries one_minus_2zb_;
  IntSeries path_;  // 1 / (1 - 2zB)
};

/// Exact embedding generating functions for non-plane binary hosts and
/// Motzkin patterns (out-degree <= 2), counted up to host automorphisms.
/// Built by the recursion over the pattern root:
///   leaf            V / (1 - zV)
///   unary           zV / (1 - zV) * A_child
///   binary, L != R  z / (1 - zV)^2 * A_L * A_R
///   binary, L == R  z / (1 - zV)^2 * (A_L(z)^2 + A_L(z^2)) / 2
/// G = (1 - zV) A. Results are memoised per canonical subtree.
class NonplaneBinaryGF {
 public:
  explicit NonplaneBinaryGF(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  /// Throws UnsupportedError unless s is Motzkin.
  IntSeries all(const PlaneTree& s);
  IntSeries good(const PlaneTree& s);
  /// good() of the clipped tree; UnsupportedError if that is not Motzkin.
  IntSeries forest(const PlaneForest& f);

 private:
  const IntSeries& all_canonical(const PlaneTree& canonical);

  std::size_t order_;
  IntSeries v_;
  IntSeries one_minus_zv_;
  IntSeries path_;  // 1 / (1 - zV)
  std::map<std::string, IntSeries> memo_;
};

/// Embedding generating functions for planted plane hosts, any plane
/// pattern, via the splitting-node recursion on S = (root, S_1..S_k):
///   k = 0  T(1 - T) / (1 - 2T)
///   k = 1  T / (1 - 2T) * A_1
///   k = 2  T / (1 - 2T)^2 * A_1 A_2
///   k > 2  [A_1 A_{2..k} + T/(1-T) A_{1..k-1} A_k] / (1 - 2T)
///          + sum_{i=2}^{k-2} A_{1..i} A_{i+1..k} / (1 - T)
/// with A_{i..j} the root over S_i..S_j. The root of S maps to the node
/// where the images of S_1 and the rest part ways; the three terms split
/// on whether S_1 or S_k is alone on its side.
/// G = (1 - 2T)/(1 - T) A. Memoised per plane subtree.
class PlantedPlaneGF {
 public:
  explicit PlantedPlaneGF(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  IntSeries all(const PlaneTree& s);
  IntSeries good(const PlaneTree& s);

  /// f_k with A_S = prod over nodes of f_{out-degree}: f_0 is the leaf
  /// series, f_1 = T/(1-2T), f_2 = T/(1-2T)^2 and for k > 2
  ///   f_k = f_{k-1} / ((1-2T)(1-T)) + sum_{i=2}^{k-2} f_i f_{k-i} / (1-T).
  const IntSeries& node_factor(std::size_t k);
  /// The same series from the degree sequence alone.
  IntSeries all(const DegreeSequence& d);
  IntSeries good(const DegreeSequence& d);

  const IntSeries& t() const noexcept { return t_; }

 private:
  std::size_t order_;
  IntSeries t_;
  IntSeries one_minus_t_;
  IntSeries one_minus_2t_;
  IntSeries inv_one_minus_t_;
  IntSeries inv_one_minus_2t_;
  IntSeries good_factor_;  // (1 - 2T) / (1 - T)
  std::map<std::string, IntSeries> memo_;
  std::vector<IntSeries> factors_;
};

// Free-function forms; each builds a fresh engine.
IntSeries series_A_plane_binary(const PlaneTree& s, std::size_t order);
IntSeries series_G_plane_binary(const PlaneTree& s, std::size_t order);
IntSeries series_A_nonplane_motzkin(const PlaneTree& s, std::size_t order);
IntSeries series_G_nonplane_motzkin(const PlaneTree& s, std::size_t order);
IntSeries series_A_planted_plane(const PlaneTree& s, std::size_t order);
IntSeries series_G_planted_plane(const PlaneTree& s, std::size_t order);
IntSeries series_forest_plane_binary(const PlaneForest& f, std::size_t order);
IntSeries series_forest_nonplane(const PlaneForest& f, std::size_t order);

/// Whether the exact engine covers (pattern, family).
bool series_supported(const PlaneTree& s, Family fam);

/// Family-dispatching form of the all/good series.
struct SeriesPair {
  IntSeries all;
  IntSeries good;
};
SeriesPair embedding_series(const PlaneTree& s, Family fam, std::size_t order);

}  // namespace treeembed

#endif  // TREEEMBED_GENERATING_HPP
