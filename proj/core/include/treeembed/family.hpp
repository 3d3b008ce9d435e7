#ifndef TREEEMBED_FAMILY_HPP
#define TREEEMBED_FAMILY_HPP

#include <cstddef>
#include <vector>

#include "treeembed/family_id.hpp"
#include "treeembed/numbers.hpp"
#include "treeembed/tree.hpp"

namespace treeembed {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Every tree of the family with n nodes, once each, in a fixed order.
/// Non-plane trees are returned as canonical representatives. Binary
/// families yield an empty list for even n.
///
/// Order: plane binary by left-subtree size, non-plane binary by ordered
/// pairs of canonical subtrees, planted plane by first-subtree size.
///
/// Throws DomainError for n < 1 and ResourceError if the family is larger
/// than `cap`.
std::vector<PlaneTree> enumerate_family(Family fam, std::size_t n,
                                        std::size_t cap = kDefaultEnumerationCap);

/// |B_n| = Catalan((n-1)/2) for odd n, |V_n| = Wedderburn-Etherington,
/// |T_n| = Catalan(n-1).
BigInt family_size(Family fam, std::size_t n);

/// Complete balanced binary tree of height h (2^{h+1} - 1 nodes).
PlaneTree complete_balanced(int h);

}  // namespace treeembed

#endif  // TREEEMBED_FAMILY_HPP
