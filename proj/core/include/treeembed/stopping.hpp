#ifndef TREEEMBED_STOPPING_HPP
#define TREEEMBED_STOPPING_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "treeembed/family_id.hpp"
#include "treeembed/numbers.hpp"
#include "treeembed/oracle.hpp"
#include "treeembed/tree.hpp"

namespace treeembed {

/// Where a count came from.
enum class Engine { oracle, series, asymptotic };
std::string engine_name(Engine e);

/// Probability that the newest element is the host root, given that the
/// elements seen so far induce s with the newest one on top.
struct WinProbability {
  Rational p;
  EmbedCount counts;
  Engine engine = Engine::oracle;
};

/// g/a for pattern s in the family at size n. With Counting::subsets (the
/// default) this is the probability of the random process; Counting::orbits
/// gives the automorphism-collapsed ratio instead (e.g. 3/4 rather than 4/5
/// for the cherry in the 5-node non-plane tree). Counts come from the exact
/// series where it applies and from the oracle otherwise. Throws DomainError
/// when s cannot occur at size n.
WinProbability best_choice_win_prob(const PlaneTree& s, Family fam, std::size_t n,
                                    Counting counting = Counting::subsets,
                                    const OracleOptions& opts = {});

/// Probability that the host is the complete balanced tree of height h,
/// given that the observed structure is s, when the host is drawn uniformly
/// from the non-plane binary trees of size 2^{h+1} - 1. A one-component
/// forest is treated as its tree.
Rational balanced_identification_prob(const PlaneForest& s, int h,
                                      Counting counting = Counting::subsets,
                                      const OracleOptions& opts = {});

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;       // observation matched s with the newest on top
  std::uint64_t successes = 0;  // ... and the newest was the host root
  double estimate = 0;
  double std_error = 0;
  bool inconclusive = true;  // no hits
};

/// Monte Carlo for best_choice_win_prob with subset counting: a host drawn
/// uniformly from enumerate_family(fam, n), its nodes revealed in uniformly
/// random order, and the first size(s) of them inspected.
///
/// Trials are split into fixed blocks of 4096; block i draws from a
/// std::mt19937_64 seeded by std::seed_seq{seed, i} (32-bit halves), so the
/// result depends on the seed alone and not on `threads`.
SimulationResult simulate_best_choice(Family fam, std::size_t n, const PlaneTree& s,
                                      std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads = 1,
                                      std::size_t enumeration_cap = 1'000'000);

}  // namespace treeembed

#endif  // TREEEMBED_STOPPING_HPP
