#include "treeembed/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "treeembed/errors.hpp"
#include "treeembed/family.hpp"
#include "treeembed/generating.hpp"

namespace treeembed {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::oracle:
      return "oracle";
    case Engine::series:
      return "series";
    case Engine::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

WinProbability best_choice_win_prob(const PlaneTree& s, Family fam, std::size_t n, Counting counting,
                                    const OracleOptions& opts) {
  if (n < 1) throw DomainError("host size must be at least 1");
  WinProbability w;
  // Plane hosts have no automorphisms, so both conventions agree there and
  // the series (orbit counts for non-plane hosts) applies.
  const bool series_ok =
      series_supported(s, fam) && (fam != Family::nonplane_binary || counting == Counting::orbits);
  if (series_ok) {
    const SeriesPair sp = embedding_series(s, fam, n);
    w.counts = {sp.all[n], sp.good[n]};
    w.engine = Engine::series;
  } else {
    OracleOptions o = opts;
    o.counting = counting;
    w.counts = count_in_family(s, fam, n, o);
    w.engine = Engine::oracle;
  }
  if (sgn(w.counts.all) == 0) {
    throw DomainError("pattern " + format_tree(s) + " has no embedding at size " + std::to_string(n));
  }
  w.p = Rational(w.counts.good, w.counts.all);
  w.p.canonicalize();
  return w;
}

Rational balanced_identification_prob(const PlaneForest& s, int h, Counting counting,
                                      const OracleOptions& opts) {
  if (s.components.empty()) throw DomainError("empty pattern");
  const PlaneTree host = complete_balanced(h);
  const std::size_t n = host.size();
  OracleOptions o = opts;
  o.counting = counting;

  BigInt num, den;
  if (s.components.size() == 1) {
    num = count_in_tree(s.components.front(), host, EmbedMode::nonplane, counting).all;
    den = count_in_family(s.components.front(), Family::nonplane_binary, n, o).all;
  } else {
    num = count_forest_in_tree(s, host, EmbedMode::nonplane, counting).all;
    den = count_forest_in_family(s, Family::nonplane_binary, n, o).all;
  }
  if (sgn(den) == 0) throw DomainError("pattern does not occur in any host of size " + std::to_string(n));
  Rational p(num, den);
  p.canonicalize();
  return p;
}

namespace {

constexpr std::uint64_t kBlock = 4096;

struct BlockTally {
  std::uint64_t hits = 0;
  std::uint64_t successes = 0;
};

class Experiment {
 public:
  Experiment(Family fam, std::size_t n, const PlaneTree& s, std::size_t cap)
      : mode_(mode_for(fam)), t_(s.size()),
        key_(mode_ == EmbedMode::plane ? format_tree(s) : canonical_key(s)) {
    for (const auto& h : enumerate_family(fam, n, cap)) hosts_.emplace_back(h);
  }

  bool empty() const noexcept { return hosts_.empty(); }

  BlockTally run_block(std::uint64_t seed, std::uint64_t block, std::uint64_t trials) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick_host(0, hosts_.size() - 1);

    BlockTally tally;
    std::vector<std::size_t> order, seen;
    for (std::uint64_t i = 0; i < trials; ++i) {
      const FlatTree& host = hosts_[pick_host(rng)];
      const std::size_t n = host.size();
      if (t_ > n) continue;
      order.resize(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      // Partial Fisher-Yates: only the first t_ positions matter.
      for (std::size_t j = 0; j < t_; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, n - 1);
        std::swap(order[j], order[pick(rng)]);
      }
      const std::size_t newest = order[t_ - 1];
      seen.assign(order.begin(), order.begin() + static_cast<long>(t_));
      std::sort(seen.begin(), seen.end());
      // A single induced tree is rooted at its smallest pre-order id.
      if (seen.front() != newest) continue;
      const PlaneForest f = induced_substructure_sorted(host, seen);
      if (f.components.size() != 1) continue;
      const std::string got =
          mode_ == EmbedMode::plane ? format_tree(f.components.front()) : canonical_key(f.components.front());
      if (got != key_) continue;
      ++tally.hits;
      if (newest == 0) ++tally.successes;
    }
    return tally;
  }

 private:
  EmbedMode mode_;
  std::size_t t_;
  std::string key_;
  std::vector<FlatTree> hosts_;
};

}  // namespace

SimulationResult simulate_best_choice(Family fam, std::size_t n, const PlaneTree& s, std::uint64_t trials,
                                      std::uint64_t seed, unsigned threads, std::size_t enumeration_cap) {
  if (trials < 1) throw DomainError("need at least one trial");
  const Experiment exp(fam, n, s, enumeration_cap);
  if (exp.empty()) throw DomainError("family " + family_name(fam) + " has no trees of size " + std::to_string(n));

  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<BlockTally> tallies(blocks);
  auto work = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t b = first; b < blocks; b += stride) {
      const std::uint64_t count = std::min(kBlock, trials - b * kBlock);
      tallies[b] = exp.run_block(seed, b, count);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& th : pool) th.join();
  }

  SimulationResult r;
  r.trials = trials;
  for (const auto& t : tallies) {
    r.hits += t.hits;
    r.successes += t.successes;
  }
  r.inconclusive = r.hits == 0;
  if (!r.inconclusive) {
    const double h = static_cast<double>(r.hits);
    r.estimate = static_cast<double>(r.successes) / h;
    r.std_error = std::sqrt(r.estimate * (1 - r.estimate) / h);
  }
  return r;
}

}  // namespace treeembed
