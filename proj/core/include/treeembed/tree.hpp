#ifndef TREEEMBED_TREE_HPP
#define TREEEMBED_TREE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "treeembed/family_id.hpp"
#include "treeembed/numbers.hpp"

namespace treeembed {

/// Rooted ordered tree. Value type; equality is structural and respects the
/// order of children.
class PlaneTree {
 public:
  /// A single node.
  PlaneTree() = default;
  explicit PlaneTree(std::vector<PlaneTree> children);

  const std::vector<PlaneTree>& children() const noexcept { return children_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t out_degree() const noexcept { return children_.size(); }
  bool is_leaf() const noexcept { return children_.empty(); }

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<PlaneTree> children_;
  std::size_t size_ = 1;
};

/// Ordered list of trees. A forest with one component is just that tree.
struct PlaneForest {
  std::vector<PlaneTree> components;

  std::size_t size() const noexcept;
  friend bool operator==(const PlaneForest&, const PlaneForest&) = default;
};

/// Out-degree distribution of a tree: d[i] = number of nodes with i children.
struct DegreeSequence {
  std::vector<std::size_t> d;  // indexed 0..m-1
  std::size_t m = 0;           // nodes
  std::size_t l = 0;           // leaves, d[0]
  std::size_t u = 0;           // unary nodes, d[1]

  std::size_t count(std::size_t degree) const noexcept {
    return degree < d.size() ? d[degree] : 0;
  }
  /// (m + l - 2) / 2, the exponent governing the sqrt(n) ratio.
  Rational k_param() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Multiset M_S of unary-binary trees obtained by replacing every node of
/// out-degree >= 3 with a binary tree, and the constant C_S = sum 2^-s(t).
struct MotzkinExpansion {
  std::vector<PlaneTree> trees;  // canonical non-plane representatives
  Rational c_s;
};

/// Grammar: tree := "(" tree* ")", whitespace allowed between tokens.
PlaneTree parse_tree(std::string_view text);
std::string format_tree(const PlaneTree& t);

/// Semicolon-separated tree literals, e.g. "();(()())".
PlaneForest parse_forest(std::string_view text);
std::string format_forest(const PlaneForest& f);

DegreeSequence degree_sequence(const PlaneTree& t);
DegreeSequence degree_sequence(const PlaneForest& f);

/// Canonical plane representative of the non-plane class of t: children are
/// sorted recursively by (size, canonical text).
PlaneTree canonical_nonplane(const PlaneTree& t);
/// format_tree(canonical_nonplane(t)).
std::string canonical_key(const PlaneTree& t);

/// True when every node has at most two children.
bool is_motzkin(const PlaneTree& t);

/// Binary nodes whose two subtrees are isomorphic as non-plane trees.
/// Throws DomainError for nodes of out-degree >= 3.
std::size_t count_symmetry_nodes(const PlaneTree& t);

MotzkinExpansion motzkin_expansions(const PlaneTree& s);

/// prod_i Catalan(i-1)^{d_i}: the number of plane binary refinements of the
/// high-degree nodes. The plane-binary and planted-plane index ranges agree
/// numerically since Catalan(0) = Catalan(1) = 1, so the family only
/// documents intent.
BigInt binary_expansion_constant(const DegreeSequence& d, Family family = Family::plane_binary);

/// One new root over the components for every distinct component order.
/// Throws DomainError for r < 2.
std::vector<PlaneTree> forest_orderings(const PlaneForest& f);

/// Canonical non-plane tree with a new root over the components.
PlaneTree clip_forest_nonplane(const PlaneForest& f);

/// Convenience constructors.
PlaneTree make_leaf();
PlaneTree make_chain(std::size_t nodes);
PlaneTree make_star(std::size_t leaves);

}  // namespace treeembed

#endif  // TREEEMBED_TREE_HPP
