#include "treeembed/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "treeembed/errors.hpp"
#include "treeembed/family.hpp"

namespace treeembed {

FlatTree::FlatTree(const PlaneTree& t) {
  const std::size_t n = t.size();
  parent_.reserve(n);
  subtree_size_.reserve(n);
  children_.reserve(n);
  // Explicit stack of (node, parent id) in pre-order.
  std::vector<std::pair<const PlaneTree*, long>> stack{{&t, -1}};
  while (!stack.empty()) {
    auto [node, par] = stack.back();
    stack.pop_back();
    const std::size_t id = parent_.size();
    parent_.push_back(par);
    subtree_size_.push_back(node->size());
    children_.emplace_back();
    if (par >= 0) children_[static_cast<std::size_t>(par)].push_back(id);
    for (auto it = node->children().rbegin(); it != node->children().rend(); ++it) {
      stack.emplace_back(&*it, static_cast<long>(id));
    }
  }
}

namespace {

// Builds the induced forest for pre-order-sorted `ids`.
PlaneForest induced_sorted(const FlatTree& t, const std::vector<std::size_t>& ids) {
  const std::size_t k = ids.size();
  std::vector<std::vector<std::size_t>> kids(k);
  std::vector<std::size_t> roots;
  std::vector<std::size_t> stack;  // indices into ids
  for (std::size_t i = 0; i < k; ++i) {
    while (!stack.empty() && !t.is_ancestor(ids[stack.back()], ids[i])) stack.pop_back();
    (stack.empty() ? roots : kids[stack.back()]).push_back(i);
    stack.push_back(i);
  }
  // Children always have larger indices, so build back to front.
  std::vector<PlaneTree> built(k);
  for (std::size_t i = k; i-- > 0;) {
    std::vector<PlaneTree> ch;
    ch.reserve(kids[i].size());
    for (auto c : kids[i]) ch.push_back(std::move(built[c]));
    built[i] = PlaneTree(std::move(ch));
  }
  PlaneForest f;
  for (auto r : roots) f.components.push_back(std::move(built[r]));
  return f;
}

// Parenthesised text of the induced forest (component texts concatenated).
std::string induced_plane_text(const FlatTree& t, const std::vector<std::size_t>& ids) {
  std::string out;
  out.reserve(2 * ids.size());
  std::vector<std::size_t> stack;
  for (auto v : ids) {
    while (!stack.empty() && v >= t.subtree_end(stack.back())) {
      stack.pop_back();
      out.push_back(')');
    }
    out.push_back('(');
    stack.push_back(v);
  }
  out.append(stack.size(), ')');
  return out;
}

// Canonical text of the host with selected nodes drawn as "[...]". Two
// subsets get the same key iff a host automorphism maps one onto the other.
std::string marked_key(const FlatTree& t, const std::vector<char>& marked, std::size_t v) {
  std::vector<std::string> parts;
  for (auto c : t.children(v)) parts.push_back(marked_key(t, marked, c));
  std::sort(parts.begin(), parts.end());
  std::string out(1, marked[v] ? '[' : '(');
  for (const auto& p : parts) out += p;
  out.push_back(marked[v] ? ']' : ')');
  return out;
}

// Tallies matching subsets, collapsing automorphism orbits on request.
class Tally {
 public:
  Tally(const FlatTree& host, bool orbits) : host_(host), orbits_(orbits), marked_(host.size(), 0) {}

  void add(const std::vector<std::size_t>& ids) {
    const bool good = ids.front() == 0;
    if (!orbits_) {
      ++count_.all;
      if (good) ++count_.good;
      return;
    }
    for (auto v : ids) marked_[v] = 1;
    std::string key = marked_key(host_, marked_, 0);
    for (auto v : ids) marked_[v] = 0;
    if (all_.insert(key).second) {
      ++count_.all;
      if (good) ++count_.good;
    }
  }

  EmbedCount result() const { return count_; }

 private:
  const FlatTree& host_;
  bool orbits_;
  std::vector<char> marked_;
  std::set<std::string> all_;
  EmbedCount count_;
};

// Matches a single-tree pattern against induced structures.
class TreeMatcher {
 public:
  TreeMatcher(const PlaneTree& s, EmbedMode mode)
      : mode_(mode), key_(mode == EmbedMode::plane ? format_tree(s) : canonical_key(s)) {}

  // `ids` sorted; caller guarantees ids.front() is an ancestor of the rest.
  bool matches(const FlatTree& t, const std::vector<std::size_t>& ids) const {
    if (mode_ == EmbedMode::plane) return induced_plane_text(t, ids) == key_;
    PlaneForest f = induced_sorted(t, ids);
    return canonical_key(f.components.front()) == key_;
  }

 private:
  EmbedMode mode_;
  std::string key_;
};

// Calls visit(ids) for every m-subset whose first element is an ancestor of
// all others. visit returns false to stop early.
bool for_each_rooted_subset(const FlatTree& t, std::size_t m,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> ids(m);
  for (std::size_t root = 0; root < t.size(); ++root) {
    const std::size_t end = t.subtree_end(root);
    if (end - root < m) continue;
    ids[0] = root;
    if (m == 1) {
      if (!visit(ids)) return false;
      continue;
    }
    // Combinations of m-1 ids from (root, end), lexicographic.
    const std::size_t k = m - 1;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = root + 1 + i;
    while (true) {
      std::copy(pick.begin(), pick.end(), ids.begin() + 1);
      if (!visit(ids)) return false;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == end - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

void for_each_subset(std::size_t n, std::size_t m,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (m == 0 || m > n) return;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    visit(pick);
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<std::string> component_keys(const PlaneForest& f, EmbedMode mode) {
  std::vector<std::string> keys;
  for (const auto& c : f.components) {
    keys.push_back(mode == EmbedMode::plane ? format_tree(c) : canonical_key(c));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

void check_budget(std::size_t n, std::size_t m, Family fam, const OracleOptions& opts) {
  if (m > n) return;
  const BigInt work = binomial(n, m) * family_size(fam, n);
  if (work.get_d() > opts.subset_budget) {
    throw ResourceError("oracle budget exceeded: C(" + std::to_string(n) + "," + std::to_string(m) +
                        ") * |family| = " + work.get_str());
  }
}

}  // namespace

PlaneForest induced_substructure(const PlaneTree& t, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw DomainError("induced_substructure: empty subset");
  FlatTree flat(t);
  std::vector<std::size_t> ids = subset;
  std::sort(ids.begin(), ids.end());
  if (ids.back() >= flat.size()) throw DomainError("induced_substructure: node id out of range");
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError("induced_substructure: duplicate node id");
  }
  return induced_sorted(flat, ids);
}

PlaneForest induced_substructure_sorted(const FlatTree& t, const std::vector<std::size_t>& sorted_ids) {
  return induced_sorted(t, sorted_ids);
}

EmbedCount count_in_tree(const PlaneTree& s, const PlaneTree& t, EmbedMode mode, Counting counting) {
  const FlatTree host(t);
  const TreeMatcher matcher(s, mode);
  Tally tally(host, mode == EmbedMode::nonplane && counting == Counting::orbits);
  if (s.size() <= host.size()) {
    for_each_rooted_subset(host, s.size(), [&](const std::vector<std::size_t>& ids) {
      if (matcher.matches(host, ids)) tally.add(ids);
      return true;
    });
  }
  return tally.result();
}

EmbedCount count_in_tree_bruteforce(const PlaneTree& s, const PlaneTree& t, EmbedMode mode,
                                    Counting counting) {
  const FlatTree host(t);
  const std::size_t n = host.size();
  if (n > 24) throw ResourceError("count_in_tree_bruteforce: host too large");
  const std::string want = mode == EmbedMode::plane ? format_tree(s) : canonical_key(s);
  Tally tally(host, mode == EmbedMode::nonplane && counting == Counting::orbits);
  std::vector<std::size_t> ids;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != s.size()) continue;
    ids.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1) ids.push_back(v);
    }
    PlaneForest f = induced_sorted(host, ids);
    if (f.components.size() != 1) continue;
    const auto& c = f.components.front();
    const std::string got = mode == EmbedMode::plane ? format_tree(c) : canonical_key(c);
    if (got == want) tally.add(ids);
  }
  return tally.result();
}

EmbedCount count_forest_in_tree(const PlaneForest& f, const PlaneTree& t, EmbedMode mode,
                                Counting counting) {
  const FlatTree host(t);
  const auto want = component_keys(f, mode);
  Tally tally(host, mode == EmbedMode::nonplane && counting == Counting::orbits);
  for_each_subset(host.size(), f.size(), [&](const std::vector<std::size_t>& ids) {
    PlaneForest induced = induced_sorted(host, ids);
    if (induced.components.size() != want.size()) return;
    if (component_keys(induced, mode) == want) tally.add(ids);
  });
  return tally.result();
}

EmbedCount count_in_family(const PlaneTree& s, Family fam, std::size_t n, const OracleOptions& opts) {
  check_budget(n, s.size(), fam, opts);
  EmbedCount total;
  for (const auto& host : enumerate_family(fam, n, opts.enumeration_cap)) {
    total += count_in_tree(s, host, mode_for(fam), opts.counting);
  }
  return total;
}

EmbedCount count_forest_in_family(const PlaneForest& f, Family fam, std::size_t n,
                                  const OracleOptions& opts) {
  if (fam == Family::planted_plane) {
    throw UnsupportedError("forest patterns are only defined for the binary families");
  }
  if (f.components.size() < 2) throw DomainError("count_forest_in_family: need r >= 2");
  check_budget(n, f.size(), fam, opts);
  EmbedCount total;
  for (const auto& host : enumerate_family(fam, n, opts.enumeration_cap)) {
    total += count_forest_in_tree(f, host, mode_for(fam), opts.counting);
  }
  return total;
}

bool is_subposet(const PlaneTree& s1, const PlaneTree& s2, EmbedMode mode) {
  if (s1.size() > s2.size()) return false;
  const FlatTree host(s2);
  const TreeMatcher matcher(s1, mode);
  bool found = false;
  for_each_rooted_subset(host, s1.size(), [&](const std::vector<std::size_t>& ids) {
    found = matcher.matches(host, ids);
    return !found;
  });
  return found;
}

}  // namespace treeembed
