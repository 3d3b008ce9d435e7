#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "treeembed/errors.hpp"
#include "treeembed/oracle.hpp"
#include "treeembed/tree.hpp"

using namespace treeembed;
using treeembed::testing::mirror_at;
using treeembed::testing::plane_trees_up_to;

TEST_CASE("parse and format") {
  CHECK(parse_tree("()").size() == 1);
  CHECK(parse_tree("()").is_leaf());

  const PlaneTree cherry = parse_tree("(()())");
  CHECK(cherry.size() == 3);
  CHECK(cherry.out_degree() == 2);

  const PlaneTree t = parse_tree("((())())");
  REQUIRE(t.out_degree() == 2);
  CHECK(t.children()[0] == parse_tree("(())"));
  CHECK(t.children()[1].is_leaf());

  CHECK(format_tree(PlaneTree()) == "()");
  CHECK(format_tree(cherry) == "(()())");
  CHECK(format_tree(parse_tree(" ( () ( ) ) ")) == "(()())");
}

TEST_CASE("parse errors carry the byte offset") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_tree(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(()") == 3);
  CHECK(offset_of("())") == 2);
  CHECK(offset_of("(x)") == 1);
  CHECK(offset_of("()()") == 2);
  CHECK_THROWS_AS(parse_forest("();"), ParseError);
}

TEST_CASE("forest text") {
  const PlaneForest f = parse_forest("();(()())");
  REQUIRE(f.components.size() == 2);
  CHECK(f.size() == 4);
  CHECK(format_forest(f) == "();(()())");
}

TEST_CASE("round trip and degree identities on every tree up to 10 nodes") {
  std::size_t count = 0;
  for (const auto& t : plane_trees_up_to(10)) {
    const std::string text = format_tree(t);
    REQUIRE(parse_tree(text) == t);
    const DegreeSequence d = degree_sequence(t);
    std::size_t nodes = 0, edges = 0;
    for (std::size_t i = 0; i < d.d.size(); ++i) {
      nodes += d.d[i];
      edges += i * d.d[i];
    }
    REQUIRE(nodes == d.m);
    REQUIRE(edges == d.m - 1);
    REQUIRE(d.l >= 1);
    ++count;
  }
  CHECK(count == 6918);  // sum of Catalan(0..9)
}

TEST_CASE("degree sequence examples") {
  const DegreeSequence one = degree_sequence(PlaneTree());
  CHECK(one.m == 1);
  CHECK(one.d == std::vector<std::size_t>{1});
  CHECK(one.l == 1);
  CHECK(one.u == 0);
  CHECK(one.k_param() == 0);

  const DegreeSequence cherry = degree_sequence(parse_tree("(()())"));
  CHECK(cherry.m == 3);
  CHECK(cherry.d == std::vector<std::size_t>{2, 0, 1});
  CHECK(cherry.l == 2);
  CHECK(cherry.k_param() == Rational(3, 2));

  const DegreeSequence star = degree_sequence(parse_tree("(()()()())"));
  CHECK(star.m == 5);
  CHECK(star.d == std::vector<std::size_t>{4, 0, 0, 0, 1});
  CHECK(star.l == 4);
}

TEST_CASE("canonical non-plane form") {
  CHECK(canonical_nonplane(parse_tree("(()(()()))")) == canonical_nonplane(parse_tree("((()())())")));
  CHECK(canonical_nonplane(parse_tree("(()())")) == parse_tree("(()())"));
  // The two 5-node plane binary trees are one non-plane tree.
  const auto b5 = enumerate_family(Family::plane_binary, 5);
  REQUIRE(b5.size() == 2);
  CHECK(canonical_key(b5[0]) == canonical_key(b5[1]));
  CHECK_FALSE(canonical_key(parse_tree("((()))")) == canonical_key(parse_tree("(()())")));
}

TEST_CASE("canonical form is idempotent and constant on child-order orbits") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    const PlaneTree t = treeembed::testing::random_tree(1 + rng() % 11, rng);
    const PlaneTree c = canonical_nonplane(t);
    REQUIRE(canonical_nonplane(c) == c);
    PlaneTree s = t;
    for (int k = 0; k < 5; ++k) s = mirror_at(s, rng() % s.size());
    REQUIRE(canonical_nonplane(s) == c);
  }
}

TEST_CASE("symmetry nodes") {
  CHECK(count_symmetry_nodes(parse_tree("(()())")) == 1);
  CHECK(count_symmetry_nodes(parse_tree("(()(()()))")) == 1);
  CHECK(count_symmetry_nodes(PlaneTree()) == 0);
  CHECK(count_symmetry_nodes(parse_tree("((()())(()()))")) == 3);
  CHECK(count_symmetry_nodes(parse_tree("((())(()))")) == 1);
  CHECK_THROWS_AS(count_symmetry_nodes(parse_tree("(()()())")), DomainError);
}

TEST_CASE("subposet examples") {
  CHECK(is_subposet(PlaneTree(), parse_tree("((()))"), EmbedMode::plane));
  CHECK_FALSE(is_subposet(parse_tree("(()())"), parse_tree("((()))"), EmbedMode::plane));
  for (const auto& t : enumerate_family(Family::plane_binary, 5)) {
    CHECK(is_subposet(parse_tree("(()())"), t, EmbedMode::plane));
    CHECK(is_subposet(parse_tree("(()())"), t, EmbedMode::nonplane));
  }
  // Plane order matters: a chain under the left child is not under the right.
  CHECK(is_subposet(parse_tree("((())())"), parse_tree("(((()()))())"), EmbedMode::plane));
  CHECK_FALSE(is_subposet(parse_tree("(()(()))"), parse_tree("(((()()))())"), EmbedMode::plane));
  CHECK(is_subposet(parse_tree("(()(()))"), parse_tree("(((()()))())"), EmbedMode::nonplane));
}

TEST_CASE("Motzkin expansion constant") {
  CHECK(motzkin_expansions(parse_tree("(()())")).c_s == Rational(1, 2));
  CHECK(motzkin_expansions(PlaneTree()).c_s == 1);

  const MotzkinExpansion star3 = motzkin_expansions(parse_tree("(()()())"));
  REQUIRE(star3.trees.size() == 1);
  CHECK(format_tree(star3.trees[0]) == canonical_key(parse_tree("(()(()()))")));
  CHECK(star3.c_s == Rational(1, 2));

  // Two non-plane binary trees with four leaves: balanced (3 symmetry
  // nodes) and caterpillar (1).
  const MotzkinExpansion star4 = motzkin_expansions(parse_tree("(()()()())"));
  CHECK(star4.trees.size() == 2);
  CHECK(star4.c_s == Rational(5, 8));

  // Distinct subtrees below a ternary node: three placements of the odd one
  // out, each a tree with one symmetry node less.
  const MotzkinExpansion mixed = motzkin_expansions(parse_tree("(()()(()))"));
  CHECK(mixed.trees.size() == 2);
  for (const auto& t : mixed.trees) CHECK(is_motzkin(t));
}

TEST_CASE("Motzkin expansion of a Motzkin tree is itself") {
  for (const auto& t : plane_trees_up_to(7)) {
    if (!is_motzkin(t)) continue;
    const MotzkinExpansion e = motzkin_expansions(t);
    REQUIRE(e.trees.size() == 1);
    REQUIRE(e.trees[0] == canonical_nonplane(t));
    Rational want(1);
    want /= Rational(BigInt(1) << count_symmetry_nodes(canonical_nonplane(t)));
    REQUIRE(e.c_s == want);
  }
}

TEST_CASE("binary expansion constant") {
  CHECK(binary_expansion_constant(degree_sequence(parse_tree("((()())(()))"))) == 1);
  CHECK(binary_expansion_constant(degree_sequence(parse_tree("(()()())"))) == 2);
  CHECK(binary_expansion_constant(degree_sequence(parse_tree("((()()()())()()())"))) == 25);
  CHECK(binary_expansion_constant(degree_sequence(parse_tree("(()()())")), Family::planted_plane) == 2);
}

TEST_CASE("forest orderings") {
  const auto two_leaves = forest_orderings(parse_forest("();()"));
  REQUIRE(two_leaves.size() == 1);
  CHECK(format_tree(two_leaves[0]) == "(()())");

  const auto mixed = forest_orderings(parse_forest("();(()())"));
  REQUIRE(mixed.size() == 2);
  std::vector<std::string> texts{format_tree(mixed[0]), format_tree(mixed[1])};
  std::sort(texts.begin(), texts.end());
  CHECK(texts == std::vector<std::string>{"((()())())", "(()(()()))"});

  CHECK(forest_orderings(parse_forest("(()());(()());(()())")).size() == 1);
  CHECK_THROWS_AS(forest_orderings(parse_forest("(())")), DomainError);
}

TEST_CASE("forest orderings count r! / prod k_i!") {
  const std::vector<std::string> pool{"()", "(())", "(()())", "((()))"};
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t r = 2 + rng() % 4;
    PlaneForest f;
    std::map<std::string, std::size_t> classes;
    for (std::size_t i = 0; i < r; ++i) {
      const std::string& pick = pool[rng() % pool.size()];
      f.components.push_back(parse_tree(pick));
      ++classes[pick];
    }
    BigInt want = factorial(r);
    for (const auto& [text, k] : classes) want /= factorial(k);
    REQUIRE(BigInt(forest_orderings(f).size()) == want);
  }
}

TEST_CASE("clip forest") {
  CHECK(clip_forest_nonplane(parse_forest("();()")) == parse_tree("(()())"));
  CHECK(clip_forest_nonplane(parse_forest("();(()())")) == canonical_nonplane(parse_tree("(()(()()))")));
  CHECK(clip_forest_nonplane(parse_forest("(()());()")) == canonical_nonplane(parse_tree("(()(()()))")));
  CHECK(clip_forest_nonplane(parse_forest("();();()")) == parse_tree("(()()())"));
  CHECK_THROWS_AS(clip_forest_nonplane(parse_forest("()")), DomainError);
}

TEST_CASE("convenience constructors") {
  CHECK(format_tree(make_chain(3)) == "((()))");
  CHECK(format_tree(make_star(3)) == "(()()())");
  CHECK(make_leaf().is_leaf());
  CHECK_THROWS_AS(make_chain(0), DomainError);
}
