#include "treeembed/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "treeembed/errors.hpp"

namespace treeembed {

PlaneTree::PlaneTree(std::vector<PlaneTree> children) : children_(std::move(children)) {
  size_ = 1;
  for (const auto& c : children_) size_ += c.size();
}

std::size_t PlaneForest::size() const noexcept {
  std::size_t total = 0;
  for (const auto& c : components) total += c.size();
  return total;
}

Family parse_family(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "plane-binary") return Family::plane_binary;
  if (key == "nonplane-binary" || key == "non-plane-binary") return Family::nonplane_binary;
  if (key == "planted-plane") return Family::planted_plane;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family fam) {
  switch (fam) {
    case Family::plane_binary: return "plane-binary";
    case Family::nonplane_binary: return "nonplane-binary";
    case Family::planted_plane: return "planted-plane";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  PlaneTree parse_whole() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty tree literal", base_ + pos_);
    PlaneTree t = parse_node();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters", base_ + pos_);
    return t;
  }

 private:
  // Iterative so deep chains cannot overflow the stack.
  PlaneTree parse_node() {
    std::vector<std::vector<PlaneTree>> stack;
    expect('(');
    stack.emplace_back();
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) throw ParseError("unbalanced parentheses", base_ + pos_);
      const char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        stack.emplace_back();
      } else if (c == ')') {
        ++pos_;
        PlaneTree done(std::move(stack.back()));
        stack.pop_back();
        if (stack.empty()) return done;
        stack.back().push_back(std::move(done));
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", base_ + pos_);
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", base_ + pos_);
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

void append_text(const PlaneTree& t, std::string& out) {
  out.push_back('(');
  for (const auto& c : t.children()) append_text(c, out);
  out.push_back(')');
}

}  // namespace

PlaneTree parse_tree(std::string_view text) { return TreeParser(text, 0).parse_whole(); }

std::string format_tree(const PlaneTree& t) {
  std::string out;
  out.reserve(2 * t.size());
  append_text(t, out);
  return out;
}

PlaneForest parse_forest(std::string_view text) {
  PlaneForest f;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::string_view piece =
        text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    f.components.push_back(TreeParser(piece, start).parse_whole());
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return f;
}

std::string format_forest(const PlaneForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.components.size(); ++i) {
    if (i) out.push_back(';');
    append_text(f.components[i], out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree sequences

namespace {

void tally_degrees(const PlaneTree& t, std::vector<std::size_t>& d) {
  if (d.size() <= t.out_degree()) d.resize(t.out_degree() + 1, 0);
  ++d[t.out_degree()];
  for (const auto& c : t.children()) tally_degrees(c, d);
}

DegreeSequence finish(std::vector<std::size_t> d, std::size_t m) {
  DegreeSequence ds;
  d.resize(std::max<std::size_t>(m, 1), 0);
  ds.d = std::move(d);
  ds.m = m;
  ds.l = ds.d[0];
  ds.u = ds.d.size() > 1 ? ds.d[1] : 0;
  return ds;
}

}  // namespace

Rational DegreeSequence::k_param() const {
  Rational k(static_cast<long>(m + l) - 2, 2);
  k.canonicalize();
  return k;
}

DegreeSequence degree_sequence(const PlaneTree& t) {
  std::vector<std::size_t> d;
  tally_degrees(t, d);
  return finish(std::move(d), t.size());
}

DegreeSequence degree_sequence(const PlaneForest& f) {
  std::vector<std::size_t> d;
  for (const auto& c : f.components) tally_degrees(c, d);
  return finish(std::move(d), f.size());
}

// ---------------------------------------------------------------------------
// Non-plane canonical form

namespace {

struct Keyed {
  PlaneTree tree;
  std::string text;
};

Keyed canonicalize(const PlaneTree& t) {
  std::vector<Keyed> kids;
  kids.reserve(t.out_degree());
  for (const auto& c : t.children()) kids.push_back(canonicalize(c));
  std::sort(kids.begin(), kids.end(), [](const Keyed& a, const Keyed& b) {
    if (a.tree.size() != b.tree.size()) return a.tree.size() < b.tree.size();
    return a.text < b.text;
  });
  std::vector<PlaneTree> children;
  std::string text = "(";
  children.reserve(kids.size());
  for (auto& k : kids) {
    text += k.text;
    children.push_back(std::move(k.tree));
  }
  text += ')';
  return {PlaneTree(std::move(children)), std::move(text)};
}

}  // namespace

PlaneTree canonical_nonplane(const PlaneTree& t) { return canonicalize(t).tree; }

std::string canonical_key(const PlaneTree& t) { return canonicalize(t).text; }

bool is_motzkin(const PlaneTree& t) {
  if (t.out_degree() > 2) return false;
  return std::all_of(t.children().begin(), t.children().end(),
                     [](const PlaneTree& c) { return is_motzkin(c); });
}

std::size_t count_symmetry_nodes(const PlaneTree& t) {
  if (t.out_degree() > 2) {
    throw DomainError("count_symmetry_nodes: node of out-degree " +
                      std::to_string(t.out_degree()) + " in a Motzkin-only operation");
  }
  std::size_t total = 0;
  for (const auto& c : t.children()) total += count_symmetry_nodes(c);
  if (t.out_degree() == 2 && canonical_key(t.children()[0]) == canonical_key(t.children()[1])) {
    ++total;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Motzkin expansions

namespace {

// Unordered binary trees whose leaves carry the labels 0..d-1, each label
// exactly once. Built as nested bipartitions where the part holding the
// smallest label comes first, so each tree is produced once.
struct LabelledShape {
  int label = -1;  // >= 0 for a leaf
  std::vector<LabelledShape> kids;
};

std::vector<LabelledShape> labelled_binary_trees(const std::vector<int>& labels) {
  if (labels.size() == 1) return {LabelledShape{labels[0], {}}};
  std::vector<LabelledShape> out;
  const std::size_t rest = labels.size() - 1;
  // Subsets of labels[1..] joined with labels[0] form the first part.
  for (std::size_t mask = 0; mask < (std::size_t{1} << rest) - 1; ++mask) {
    std::vector<int> left{labels[0]}, right;
    for (std::size_t i = 0; i < rest; ++i) {
      ((mask >> i) & 1 ? left : right).push_back(labels[i + 1]);
    }
    for (const auto& a : labelled_binary_trees(left)) {
      for (const auto& b : labelled_binary_trees(right)) {
        out.push_back(LabelledShape{-1, {a, b}});
      }
    }
  }
  return out;
}

PlaneTree realise(const LabelledShape& shape, const std::vector<PlaneTree>& children) {
  if (shape.label >= 0) return children[static_cast<std::size_t>(shape.label)];
  return PlaneTree({realise(shape.kids[0], children), realise(shape.kids[1], children)});
}

// All distinct canonical Motzkin refinements of t, keyed by canonical text.
std::map<std::string, PlaneTree> expand(const PlaneTree& t) {
  std::vector<std::vector<PlaneTree>> options;
  for (const auto& c : t.children()) {
    std::vector<PlaneTree> opts;
    for (auto& [key, tree] : expand(c)) opts.push_back(std::move(tree));
    options.push_back(std::move(opts));
  }

  std::vector<LabelledShape> shapes;
  const std::size_t d = t.out_degree();
  if (d >= 3) {
    std::vector<int> labels(d);
    std::iota(labels.begin(), labels.end(), 0);
    shapes = labelled_binary_trees(labels);
  }

  std::map<std::string, PlaneTree> result;
  std::vector<std::size_t> choice(d, 0);
  std::vector<PlaneTree> picked(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) picked[i] = options[i][choice[i]];
    if (d < 3) {
      PlaneTree node = canonical_nonplane(PlaneTree(picked));
      result.emplace(format_tree(node), std::move(node));
    } else {
      for (const auto& shape : shapes) {
        PlaneTree node = canonical_nonplane(realise(shape, picked));
        result.emplace(format_tree(node), std::move(node));
      }
    }
    std::size_t i = 0;
    while (i < d && ++choice[i] == options[i].size()) choice[i++] = 0;
    if (i == d) break;
  }
  return result;
}

}  // namespace

MotzkinExpansion motzkin_expansions(const PlaneTree& s) {
  MotzkinExpansion out;
  out.c_s = 0;
  for (auto& [key, tree] : expand(s)) {
    Rational term(1);
    term /= Rational(BigInt(1) << count_symmetry_nodes(tree));
    out.c_s += term;
    out.trees.push_back(std::move(tree));
  }
  out.c_s.canonicalize();
  return out;
}

BigInt binary_expansion_constant(const DegreeSequence& d, Family) {
  BigInt c = 1;
  for (std::size_t i = 3; i < d.d.size(); ++i) {
    for (std::size_t j = 0; j < d.d[i]; ++j) c *= catalan(i - 1);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Forests

std::vector<PlaneTree> forest_orderings(const PlaneForest& f) {
  if (f.components.size() < 2) throw DomainError("forest_orderings: need at least two components");
  std::vector<std::string> keys;
  for (const auto& c : f.components) keys.push_back(format_tree(c));
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  // next_permutation over key order visits each distinct sequence once.
  std::vector<PlaneTree> out;
  std::vector<std::string> seq;
  for (auto i : order) seq.push_back(keys[i]);
  do {
    std::vector<PlaneTree> kids;
    for (const auto& k : seq) kids.push_back(parse_tree(k));
    out.emplace_back(std::move(kids));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

PlaneTree clip_forest_nonplane(const PlaneForest& f) {
  if (f.components.size() < 2) throw DomainError("clip_forest_nonplane: need at least two components");
  return canonical_nonplane(PlaneTree(f.components));
}

PlaneTree make_leaf() { return PlaneTree(); }

PlaneTree make_chain(std::size_t nodes) {
  if (nodes == 0) throw DomainError("make_chain: zero nodes");
  PlaneTree t;
  for (std::size_t i = 1; i < nodes; ++i) t = PlaneTree(std::vector<PlaneTree>{t});
  return t;
}

PlaneTree make_star(std::size_t leaves) {
  return PlaneTree(std::vector<PlaneTree>(leaves, PlaneTree()));
}

}  // namespace treeembed
