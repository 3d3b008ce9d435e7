#ifndef TREEEMBED_ORACLE_HPP
#define TREEEMBED_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treeembed/family_id.hpp"
#include "treeembed/numbers.hpp"
#include "treeembed/tree.hpp"

namespace treeembed {

/// Number of all and of good (root-containing) embeddings.
struct EmbedCount {
  BigInt all = 0;
  BigInt good = 0;

  EmbedCount& operator+=(const EmbedCount& o) {
    all += o.all;
    good += o.good;
    return *this;
  }
  friend bool operator==(const EmbedCount&, const EmbedCount&) = default;
};

/// Pre-order array form of a tree. Node ids are pre-order indices, so the
/// subtree of v is the id range [v, v + subtree_size[v]).
class FlatTree {
 public:
  explicit FlatTree(const PlaneTree& t);

  std::size_t size() const noexcept { return parent_.size(); }
  /// -1 for the root.
  long parent(std::size_t v) const { return parent_[v]; }
  std::size_t subtree_end(std::size_t v) const { return v + subtree_size_[v]; }
  const std::vector<std::size_t>& children(std::size_t v) const { return children_[v]; }

  bool is_ancestor(std::size_t a, std::size_t v) const { return a <= v && v < subtree_end(a); }

 private:
  std::vector<long> parent_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::vector<std::size_t>> children_;
};

/// Hasse diagram of the ancestor order restricted to `subset` (pre-order
/// ids): every selected node hangs below its nearest selected ancestor and
/// siblings keep their pre-order. Throws DomainError on empty input or an
/// invalid id.
PlaneForest induced_substructure(const PlaneTree& t, const std::vector<std::size_t>& subset);
/// Same on a prebuilt flat tree; `sorted_ids` must be strictly increasing
/// and in range (not checked).
PlaneForest induced_substructure_sorted(const FlatTree& t, const std::vector<std::size_t>& sorted_ids);

/// Counts node subsets W with induced_substructure(t, W) equal to s (plane
/// mode: as plane trees, non-plane mode: as non-plane trees). With
/// Counting::orbits, subsets mapped onto each other by an automorphism of t
/// count once; this is the convention under which the cherry has four
/// embeddings in the 5-node non-plane tree.
EmbedCount count_in_tree(const PlaneTree& s, const PlaneTree& t, EmbedMode mode,
                         Counting counting = Counting::orbits);

/// Reference path for count_in_tree: a plain sweep over all 2^n bitmasks,
/// no pruning. Only for n <= 24.
EmbedCount count_in_tree_bruteforce(const PlaneTree& s, const PlaneTree& t, EmbedMode mode,
                                    Counting counting = Counting::orbits);

/// Forest pattern counted in one host. Components are matched as a multiset
/// (plane mode: plane-equal components, non-plane: canonical components).
/// `good` is always zero for r >= 2.
EmbedCount count_forest_in_tree(const PlaneForest& f, const PlaneTree& t, EmbedMode mode,
                                Counting counting = Counting::orbits);

/// Oracle budget for one family query: C(n, m) * |family| subset checks.
inline constexpr double kDefaultSubsetBudget = 1e8;

struct OracleOptions {
  Counting counting = Counting::orbits;
  std::size_t enumeration_cap = 1'000'000;
  double subset_budget = kDefaultSubsetBudget;
};

/// Sum of count_in_tree over enumerate_family(fam, n), in the family's mode.
EmbedCount count_in_family(const PlaneTree& s, Family fam, std::size_t n,
                           const OracleOptions& opts = {});

/// Forest pattern summed over a binary family. Throws UnsupportedError for
/// planted plane hosts.
EmbedCount count_forest_in_family(const PlaneForest& f, Family fam, std::size_t n,
                                  const OracleOptions& opts = {});

/// True iff s1 embeds into s2 at least once.
bool is_subposet(const PlaneTree& s1, const PlaneTree& s2, EmbedMode mode);

}  // namespace treeembed

#endif  // TREEEMBED_ORACLE_HPP
