#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "treeembed/errors.hpp"
#include "treeembed/family.hpp"
#include "treeembed/oracle.hpp"

using namespace treeembed;
using treeembed::testing::plane_trees_up_to;

namespace {

const PlaneTree kCherry = parse_tree("(()())");

}  // namespace

TEST_CASE("induced substructure examples") {
  const PlaneTree t = parse_tree("((()())())");
  const PlaneForest whole = induced_substructure(t, {0, 1, 2, 3, 4});
  REQUIRE(whole.components.size() == 1);
  CHECK(whole.components[0] == t);

  CHECK(induced_substructure(make_chain(3), {0, 2}).components[0] == make_chain(2));

  // Pre-order ids: 0 root, 1 inner cherry node, 2 and 3 its leaves, 4 leaf.
  CHECK(induced_substructure(t, {0, 2, 3}).components[0] == kCherry);
  CHECK(induced_substructure(t, {2, 3, 4}).components.size() == 3);
  CHECK(induced_substructure(t, {1, 4}) == parse_forest("();()"));
  CHECK_THROWS_AS(induced_substructure(t, {5}), DomainError);
  CHECK_THROWS_AS(induced_substructure(t, {}), DomainError);
}

TEST_CASE("count in one tree") {
  for (const auto& t : enumerate_family(Family::plane_binary, 5)) {
    CHECK(count_in_tree(kCherry, t, EmbedMode::plane) == EmbedCount{5, 4});
  }
  const PlaneTree v5 = enumerate_family(Family::nonplane_binary, 5).at(0);
  CHECK(count_in_tree(kCherry, v5, EmbedMode::nonplane) == EmbedCount{4, 3});
  CHECK(count_in_tree(kCherry, v5, EmbedMode::nonplane, Counting::subsets) == EmbedCount{5, 4});
  for (const auto& t : plane_trees_up_to(6)) {
    REQUIRE(count_in_tree(PlaneTree(), t, EmbedMode::plane) == EmbedCount{BigInt(t.size()), 1});
  }
}

TEST_CASE("family examples") {
  CHECK(count_in_family(kCherry, Family::plane_binary, 5) == EmbedCount{10, 8});
  CHECK(count_in_family(PlaneTree(), Family::plane_binary, 5) == EmbedCount{10, 2});
  CHECK(count_in_family(kCherry, Family::nonplane_binary, 5) == EmbedCount{4, 3});
  CHECK(count_in_family(kCherry, Family::plane_binary, 4) == EmbedCount{0, 0});

  OracleOptions tight;
  tight.subset_budget = 10;
  CHECK_THROWS_AS(count_in_family(kCherry, Family::plane_binary, 9, tight), ResourceError);
}

TEST_CASE("forest examples") {
  CHECK(count_forest_in_family(parse_forest("();()"), Family::plane_binary, 5) == EmbedCount{8, 0});
  CHECK(count_forest_in_family(parse_forest("();()"), Family::nonplane_binary, 5) == EmbedCount{3, 0});
  CHECK_THROWS_AS(count_forest_in_family(parse_forest("();()"), Family::planted_plane, 5), UnsupportedError);

  const PlaneForest f = parse_forest("();(()())");
  BigInt sigma = 0;
  for (const auto& t : forest_orderings(f)) sigma += count_in_family(t, Family::plane_binary, 7).good;
  CHECK(count_forest_in_family(f, Family::plane_binary, 7).all == sigma);
  CHECK(sgn(sigma) > 0);
}

TEST_CASE("pruned count agrees with the plain bitmask sweep") {
  std::mt19937_64 rng(3);
  const auto patterns = plane_trees_up_to(4);
  std::vector<PlaneTree> hosts = plane_trees_up_to(7);
  for (const auto& t : enumerate_family(Family::plane_binary, 9)) hosts.push_back(t);
  for (const auto& t : enumerate_family(Family::nonplane_binary, 11)) hosts.push_back(t);
  for (int round = 0; round < 600; ++round) {
    const PlaneTree& s = patterns[rng() % patterns.size()];
    const PlaneTree& t = hosts[rng() % hosts.size()];
    for (EmbedMode mode : {EmbedMode::plane, EmbedMode::nonplane}) {
      for (Counting c : {Counting::subsets, Counting::orbits}) {
        REQUIRE(count_in_tree(s, t, mode, c) == count_in_tree_bruteforce(s, t, mode, c));
      }
    }
  }
}

TEST_CASE("plane embeddings are non-plane embeddings") {
  const auto patterns = plane_trees_up_to(5);
  for (std::size_t n = 1; n <= 9; n += 2) {
    for (const auto& t : enumerate_family(Family::plane_binary, n)) {
      for (const auto& s : patterns) {
        const EmbedCount p = count_in_tree(s, t, EmbedMode::plane, Counting::subsets);
        const EmbedCount q = count_in_tree(s, t, EmbedMode::nonplane, Counting::subsets);
        REQUIRE(p.all <= q.all);
        REQUIRE(p.good <= q.good);
        REQUIRE(p.good <= p.all);
      }
    }
  }
}

TEST_CASE("non-plane subset counts sum plane counts over mirror images") {
  // Each subset of a plane host matches the non-plane class of s iff it
  // matches exactly one plane arrangement of that class.
  const auto patterns = plane_trees_up_to(4);
  for (std::size_t n = 1; n <= 9; n += 2) {
    for (const auto& t : enumerate_family(Family::plane_binary, n)) {
      for (const auto& s : patterns) {
        if (canonical_nonplane(s) != s) continue;
        EmbedCount sum;
        for (const auto& u : plane_trees_up_to(4)) {
          if (u.size() == s.size() && canonical_key(u) == canonical_key(s)) {
            sum += count_in_tree(u, t, EmbedMode::plane);
          }
        }
        REQUIRE(sum == count_in_tree(s, t, EmbedMode::nonplane, Counting::subsets));
      }
    }
  }
}

TEST_CASE("plane hosts weight non-plane hosts by their images") {
  // Subsets over plane hosts equal subsets over non-plane hosts, each
  // weighted by its number of plane images.
  for (std::size_t n = 1; n <= 11; n += 2) {
    const auto plane = enumerate_family(Family::plane_binary, n);
    std::map<std::string, std::size_t> images;
    for (const auto& t : plane) ++images[canonical_key(t)];
    for (const auto& s : plane_trees_up_to(4)) {
      if (!is_motzkin(s) || canonical_nonplane(s) != s) continue;
      BigInt lhs = 0, rhs = 0;
      for (const auto& t : plane) lhs += count_in_tree(s, t, EmbedMode::nonplane, Counting::subsets).all;
      for (const auto& t : enumerate_family(Family::nonplane_binary, n)) {
        rhs += BigInt(images[canonical_key(t)]) * count_in_tree(s, t, EmbedMode::nonplane, Counting::subsets).all;
      }
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("clip identity and sigma identity at small sizes") {
  const std::vector<std::string> forests{"();()", "();(())", "();(()())", "(());(())", "();();()"};
  for (const auto& text : forests) {
    const PlaneForest f = parse_forest(text);
    for (std::size_t n = 1; n <= 11; n += 2) {
      BigInt sigma = 0;
      for (const auto& t : forest_orderings(f)) sigma += count_in_family(t, Family::plane_binary, n).good;
      REQUIRE(count_forest_in_family(f, Family::plane_binary, n).all == sigma);
      REQUIRE(count_forest_in_family(f, Family::nonplane_binary, n).all ==
              count_in_family(clip_forest_nonplane(f), Family::nonplane_binary, n).good);
    }
  }
}

TEST_CASE("subposet agrees with counts") {
  const auto trees = plane_trees_up_to(5);
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      if (a.size() > b.size()) continue;
      for (EmbedMode mode : {EmbedMode::plane, EmbedMode::nonplane}) {
        REQUIRE(is_subposet(a, b, mode) == (sgn(count_in_tree(a, b, mode, Counting::subsets).all) > 0));
      }
    }
  }
}
