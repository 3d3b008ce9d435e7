// Helpers shared by the unit tests and the acceptance runner.
#ifndef TREEEMBED_TESTS_SUPPORT_HPP
#define TREEEMBED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "treeembed/family.hpp"
#include "treeembed/numbers.hpp"
#include "treeembed/tree.hpp"

namespace treeembed::testing {

// num/den in lowest terms (the two-argument mpq_class constructor does not
// reduce, and GMP comparisons assume reduced operands).
inline Rational reduced(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Every plane tree with m nodes (these are exactly the planted plane trees).
inline std::vector<PlaneTree> plane_trees(std::size_t m) { return enumerate_family(Family::planted_plane, m); }

inline std::vector<PlaneTree> plane_trees_up_to(std::size_t max_m) {
  std::vector<PlaneTree> out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (auto& t : plane_trees(m)) out.push_back(std::move(t));
  }
  return out;
}

// Uniform-ish random plane tree: attach each new node under a random
// existing node at a random child position.
inline PlaneTree random_tree(std::size_t m, std::mt19937_64& rng);

// Inserts a leaf under the node with pre-order index `at`, as child `pos`
// (clamped), or subdivides the edge above `at` when `subdivide` is set.
inline PlaneTree grow(const PlaneTree& t, std::size_t at, std::size_t pos, bool subdivide) {
  std::size_t counter = 0;
  auto rec = [&](auto&& self, const PlaneTree& node) -> PlaneTree {
    const std::size_t id = counter++;
    std::vector<PlaneTree> kids;
    for (const auto& c : node.children()) kids.push_back(self(self, c));
    if (id == at && !subdivide) {
      kids.insert(kids.begin() + static_cast<long>(std::min(pos, kids.size())), PlaneTree());
    }
    PlaneTree out(std::move(kids));
    if (id == at && subdivide) return PlaneTree(std::vector<PlaneTree>{out});
    return out;
  };
  return rec(rec, t);
}

inline PlaneTree random_tree(std::size_t m, std::mt19937_64& rng) {
  PlaneTree t;
  for (std::size_t size = 1; size < m; ++size) {
    std::uniform_int_distribution<std::size_t> at(0, size - 1), pos(0, size);
    t = grow(t, at(rng), pos(rng), false);
  }
  return t;
}

// Reverses the children of the node with pre-order index `at`.
inline PlaneTree mirror_at(const PlaneTree& t, std::size_t at) {
  std::size_t counter = 0;
  auto rec = [&](auto&& self, const PlaneTree& node) -> PlaneTree {
    const std::size_t id = counter++;
    std::vector<PlaneTree> kids;
    for (const auto& c : node.children()) kids.push_back(self(self, c));
    if (id == at) std::reverse(kids.begin(), kids.end());
    return PlaneTree(std::move(kids));
  };
  return rec(rec, t);
}

// Wedderburn-Etherington numbers by their own recurrence, indexed by leaves.
inline std::vector<BigInt> wedderburn(std::size_t leaves) {
  std::vector<BigInt> w(leaves + 1, 0);
  if (leaves >= 1) w[1] = 1;
  for (std::size_t n = 2; n <= leaves; ++n) {
    BigInt sum = 0;
    for (std::size_t i = 1; 2 * i < n; ++i) sum += w[i] * w[n - i];
    if (n % 2 == 0) {
      const BigInt& h = w[n / 2];
      sum += h * (h + 1) / 2;
    }
    w[n] = sum;
  }
  return w;
}

// Orbit counts of k-star embeddings in the non-plane binary trees of each
// size n <= N, computed independently of the oracle and of the series
// engine: unlabelled binary trees decorated with marks are counted through
// Z(S_2) = (F(z)^2 + F(z^2)) / 2 over the mark states
//   j = 0..k  (j pairwise incomparable marks, all waiting for a common top)
//   k + 1     (a finished star).
inline std::vector<BigInt> star_orbit_counts(std::size_t k, std::size_t N) {
  const std::size_t done = k + 1, states = k + 2;
  std::vector<std::vector<BigInt>> f(states, std::vector<BigInt>(N + 1, 0));
  if (N >= 1) {
    f[0][1] = 1;
    f[1][1] = 1;
  }
  for (std::size_t n = 3; n <= N; n += 2) {
    const std::size_t m = n - 1;
    std::vector<BigInt> pairs(states, 0);
    for (std::size_t i = 1; i < m; i += 2) {
      const std::size_t j = m - i;
      for (std::size_t a = 0; a < states; ++a) {
        if (sgn(f[a][i]) == 0) continue;
        for (std::size_t b = 0; b < states; ++b) {
          if (sgn(f[b][j]) == 0) continue;
          std::size_t c;
          if (a == done || b == done) {
            if (a + b != done) continue;  // a finished star next to marks is not a star
            c = done;
          } else {
            c = a + b;
            if (c > k) continue;
          }
          mpz_addmul(pairs[c].get_mpz_t(), f[a][i].get_mpz_t(), f[b][j].get_mpz_t());
        }
      }
    }
    if (m % 2 == 0) {
      for (std::size_t a = 0; 2 * a <= k; ++a) pairs[2 * a] += f[a][m / 2];
    }
    for (auto& p : pairs) mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(), 2);
    f[0][n] += pairs[0];
    f[1][n] += pairs[0] + pairs[1];  // node marked as a star leaf, or unmarked
    for (std::size_t j = 2; j <= k; ++j) f[j][n] += pairs[j];
    f[done][n] += pairs[done] + pairs[k];  // node marked as the star's top
  }
  return f[done];
}

}  // namespace treeembed::testing

#endif  // TREEEMBED_TESTS_SUPPORT_HPP
