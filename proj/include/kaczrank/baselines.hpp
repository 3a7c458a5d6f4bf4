#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kaczrank/core.hpp"

namespace kaczrank {

/// Pairwise win tallies: wins(i, j) counts sampled comparisons asserting
/// that item i beat item j.
struct WinRecord {
  int item_count = 0;
  std::vector<std::int64_t> counts;  // row-major n*n, zero diagonal

  explicit WinRecord(int n);

  std::int64_t wins(int winner, int loser) const;
  void add_win(int winner, int loser);
};

/// Tallies a comparison stream into a WinRecord: each comparison is a win
/// for its high item over its low item.
WinRecord accumulate(int item_count, std::span<const Comparison> comparisons);

struct RankCentralityResult {
  ScoreVector scores;  // stationary probabilities, non-negative, sum 1
  Ranking ranking;
  int sweeps = 0;  // power-iteration sweeps used
};

/// Rank Centrality: a random walk over items whose transition rate from i to
/// j is j's win fraction against i, scaled by 1/d_max with self-loops taking
/// the remainder. The stationary distribution, found by power iteration to
/// the given tolerance, scores the items. `regularization` is added to every
/// off-diagonal count so sparse records still give an ergodic walk.
RankCentralityResult rank_centrality(const WinRecord& record,
                                     double regularization = 0.01,
                                     double tol = 1e-10);

}  // namespace kaczrank
