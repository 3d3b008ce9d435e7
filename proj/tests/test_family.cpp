#include <doctest.h>

#include <set>

#include "support.hpp"
#include "treeembed/errors.hpp"
#include "treeembed/family.hpp"
#include "treeembed/tree.hpp"

using namespace treeembed;

namespace {

bool all_degrees_in(const PlaneTree& t, std::set<std::size_t> allowed) {
  if (!allowed.count(t.out_degree())) return false;
  for (const auto& c : t.children()) {
    if (!all_degrees_in(c, allowed)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("enumeration examples") {
  CHECK(enumerate_family(Family::plane_binary, 5).size() == 2);
  CHECK(enumerate_family(Family::nonplane_binary, 5).size() == 1);
  CHECK(enumerate_family(Family::nonplane_binary, 7).size() == 2);
  CHECK(enumerate_family(Family::nonplane_binary, 9).size() == 3);
  CHECK(enumerate_family(Family::planted_plane, 4).size() == 5);
  CHECK(enumerate_family(Family::plane_binary, 6).empty());
  CHECK_THROWS_AS(enumerate_family(Family::plane_binary, 0), DomainError);
  CHECK_THROWS_AS(enumerate_family(Family::planted_plane, 12, 1000), ResourceError);
}

TEST_CASE("family sizes") {
  CHECK(family_size(Family::plane_binary, 7) == 5);
  CHECK(family_size(Family::plane_binary, 6) == 0);
  CHECK(family_size(Family::nonplane_binary, 13) == 11);
  CHECK(family_size(Family::planted_plane, 4) == 5);
  CHECK_THROWS_AS(family_size(Family::plane_binary, 0), DomainError);

  const auto w = treeembed::testing::wedderburn(60);
  for (std::size_t n = 1; n <= 119; n += 2) {
    REQUIRE(family_size(Family::nonplane_binary, n) == w[(n + 1) / 2]);
    REQUIRE(family_size(Family::plane_binary, n) == catalan((n - 1) / 2));
  }
  for (std::size_t n = 1; n <= 60; ++n) REQUIRE(family_size(Family::planted_plane, n) == catalan(n - 1));
}

TEST_CASE("enumeration agrees with family_size and yields distinct members") {
  for (Family fam : {Family::plane_binary, Family::nonplane_binary, Family::planted_plane}) {
    const std::size_t max_n = fam == Family::planted_plane ? 10 : 19;
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto trees = enumerate_family(fam, n);
      REQUIRE(BigInt(trees.size()) == family_size(fam, n));
      std::set<std::string> seen;
      for (const auto& t : trees) {
        REQUIRE(t.size() == n);
        if (fam != Family::planted_plane) REQUIRE(all_degrees_in(t, {0, 2}));
        if (fam == Family::nonplane_binary) REQUIRE(canonical_nonplane(t) == t);
        seen.insert(fam == Family::nonplane_binary ? canonical_key(t) : format_tree(t));
      }
      REQUIRE(seen.size() == trees.size());
    }
  }
}

TEST_CASE("non-plane classes partition the plane binary trees") {
  for (std::size_t n = 1; n <= 15; n += 2) {
    std::set<std::string> classes;
    for (const auto& t : enumerate_family(Family::plane_binary, n)) classes.insert(canonical_key(t));
    REQUIRE(BigInt(classes.size()) == family_size(Family::nonplane_binary, n));
  }
}

TEST_CASE("enumeration order is fixed") {
  const auto a = enumerate_family(Family::planted_plane, 6);
  const auto b = enumerate_family(Family::planted_plane, 6);
  CHECK(a == b);
}

TEST_CASE("complete balanced trees") {
  CHECK(complete_balanced(0) == PlaneTree());
  CHECK(format_tree(complete_balanced(1)) == "(()())");
  CHECK(format_tree(complete_balanced(2)) == "((()())(()()))");
  CHECK(complete_balanced(4).size() == 31);
  CHECK_THROWS_AS(complete_balanced(-1), DomainError);
}

TEST_CASE("family names") {
  CHECK(parse_family("plane-binary") == Family::plane_binary);
  CHECK(parse_family("nonplane_binary") == Family::nonplane_binary);
  CHECK(parse_family("non-plane-binary") == Family::nonplane_binary);
  CHECK(parse_family("planted-plane") == Family::planted_plane);
  CHECK(family_name(Family::planted_plane) == "planted-plane");
  CHECK_THROWS(parse_family("ternary"));
}
