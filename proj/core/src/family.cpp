#include "treeembed/family.hpp"

#include <string>
#include <utility>

#include "treeembed/errors.hpp"

namespace treeembed {

namespace {

using Level = std::vector<PlaneTree>;

std::vector<Level> plane_binary_levels(std::size_t n) {
  std::vector<Level> by_size(n + 1);
  by_size[1].push_back(PlaneTree());
  for (std::size_t size = 3; size <= n; size += 2) {
    for (std::size_t left = 1; left + 1 < size; left += 2) {
      const std::size_t right = size - 1 - left;
      for (const auto& a : by_size[left]) {
        for (const auto& b : by_size[right]) by_size[size].push_back(PlaneTree({a, b}));
      }
    }
  }
  return by_size;
}

std::vector<Level> nonplane_binary_levels(std::size_t n) {
  std::vector<Level> by_size(n + 1);
  by_size[1].push_back(PlaneTree());
  for (std::size_t size = 3; size <= n; size += 2) {
    for (std::size_t left = 1; 2 * left <= size - 1; left += 2) {
      const std::size_t right = size - 1 - left;
      const auto& ls = by_size[left];
      const auto& rs = by_size[right];
      for (std::size_t i = 0; i < ls.size(); ++i) {
        // Same size: take unordered pairs i <= j only.
        for (std::size_t j = (left == right ? i : 0); j < rs.size(); ++j) {
          by_size[size].push_back(canonical_nonplane(PlaneTree({ls[i], rs[j]})));
        }
      }
    }
  }
  return by_size;
}

std::vector<Level> planted_plane_levels(std::size_t n) {
  std::vector<Level> by_size(n + 1);
  by_size[1].push_back(PlaneTree());
  for (std::size_t size = 2; size <= n; ++size) {
    for (std::size_t first = 1; first < size; ++first) {
      for (const auto& head : by_size[first]) {
        for (const auto& rest : by_size[size - first]) {
          std::vector<PlaneTree> kids;
          kids.reserve(rest.out_degree() + 1);
          kids.push_back(head);
          kids.insert(kids.end(), rest.children().begin(), rest.children().end());
          by_size[size].push_back(PlaneTree(std::move(kids)));
        }
      }
    }
  }
  return by_size;
}

BigInt wedderburn_etherington(std::size_t n) {
  if (n % 2 == 0) return 0;
  std::vector<BigInt> w(n + 1, 0);
  w[1] = 1;
  for (std::size_t size = 3; size <= n; size += 2) {
    BigInt total = 0;
    for (std::size_t left = 1; 2 * left <= size - 1; left += 2) {
      const std::size_t right = size - 1 - left;
      if (left == right) {
        total += w[left] * (w[left] + 1) / 2;
      } else {
        total += w[left] * w[right];
      }
    }
    w[size] = total;
  }
  return w[n];
}

}  // namespace

BigInt family_size(Family fam, std::size_t n) {
  if (n < 1) throw DomainError("family_size: n must be >= 1");
  switch (fam) {
    case Family::plane_binary: return n % 2 == 1 ? catalan((n - 1) / 2) : BigInt(0);
    case Family::nonplane_binary: return wedderburn_etherington(n);
    case Family::planted_plane: return catalan(n - 1);
  }
  return 0;
}

std::vector<PlaneTree> enumerate_family(Family fam, std::size_t n, std::size_t cap) {
  if (n < 1) throw DomainError("enumerate_family: n must be >= 1");
  const BigInt count = family_size(fam, n);
  if (count > cap) {
    throw ResourceError("enumerate_family: " + family_name(fam) + " at n=" + std::to_string(n) +
                        " has " + count.get_str() + " trees, above the cap of " +
                        std::to_string(cap));
  }
  if (is_binary(fam) && n % 2 == 0) return {};
  switch (fam) {
    case Family::plane_binary: return std::move(plane_binary_levels(n)[n]);
    case Family::nonplane_binary: return std::move(nonplane_binary_levels(n)[n]);
    case Family::planted_plane: return std::move(planted_plane_levels(n)[n]);
  }
  return {};
}

PlaneTree complete_balanced(int h) {
  if (h < 0) throw DomainError("complete_balanced: negative height");
  PlaneTree t;
  for (int i = 0; i < h; ++i) t = PlaneTree({t, t});
  return t;
}

}  // namespace treeembed
