#include "kaczrank/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace kaczrank {

WinRecord::WinRecord(int n) : item_count(n) {
  if (n < 2) throw std::invalid_argument("need at least two items");
  counts.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

std::int64_t WinRecord::wins(int winner, int loser) const {
  return counts[static_cast<std::size_t>(winner) *
                    static_cast<std::size_t>(item_count) +
                static_cast<std::size_t>(loser)];
}

void WinRecord::add_win(int winner, int loser) {
  check_comparison({loser, winner}, item_count);
  ++counts[static_cast<std::size_t>(winner) * static_cast<std::size_t>(item_count) +
           static_cast<std::size_t>(loser)];
}

WinRecord accumulate(int item_count, std::span<const Comparison> comparisons) {
  WinRecord record(item_count);
  for (const Comparison& c : comparisons) record.add_win(c.high, c.low);
  return record;
}

RankCentralityResult rank_centrality(const WinRecord& record, double regularization,
                                     double tol) {
  if (regularization < 0.0) {
    throw std::invalid_argument("regularization must be non-negative");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const int n = record.item_count;
  const auto un = static_cast<std::size_t>(n);

  // Regularized totals per pair; a pair is active once it has any weight.
  std::vector<double> fraction(un * un, 0.0);  // fraction(i,j): j's share vs i
  std::vector<int> degree(un, 0);
  bool any_active = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double wij = static_cast<double>(record.wins(i, j)) + regularization;
      const double wji = static_cast<double>(record.wins(j, i)) + regularization;
      const double total = wij + wji;
      if (total <= 0.0) continue;
      any_active = true;
      fraction[un * static_cast<std::size_t>(i) + static_cast<std::size_t>(j)] =
          wji / total;
      fraction[un * static_cast<std::size_t>(j) + static_cast<std::size_t>(i)] =
          wij / total;
      ++degree[static_cast<std::size_t>(i)];
      ++degree[static_cast<std::size_t>(j)];
    }
  }
  if (!any_active) {
    throw std::invalid_argument("win record is empty and unregularized");
  }
  int d_max = 0;
  for (int d : degree) d_max = std::max(d_max, d);

  // Row-stochastic transition matrix: off-diagonal fraction/d_max, self-loop
  // absorbs the rest.
  std::vector<double> transition(un * un, 0.0);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double rate =
          fraction[un * static_cast<std::size_t>(i) + static_cast<std::size_t>(j)] /
          static_cast<double>(d_max);
      transition[un * static_cast<std::size_t>(i) + static_cast<std::size_t>(j)] = rate;
      off += rate;
    }
    transition[un * static_cast<std::size_t>(i) + static_cast<std::size_t>(i)] =
        1.0 - off;
  }

  RankCentralityResult result;
  result.scores.assign(un, 1.0 / static_cast<double>(n));
  ScoreVector next(un, 0.0);
  constexpr int kMaxSweeps = 1000000;
  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    for (std::size_t j = 0; j < un; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < un; ++i) {
        acc += result.scores[i] * transition[un * i + j];
      }
      next[j] = acc;
    }
    double sum = 0.0;
    for (double v : next) sum += v;
    for (double& v : next) v /= sum;
    double delta = 0.0;
    for (std::size_t j = 0; j < un; ++j) {
      delta = std::max(delta, std::abs(next[j] - result.scores[j]));
    }
    result.scores.swap(next);
    result.sweeps = sweep;
    if (delta < tol) {
      result.ranking = ranking_from_scores(result.scores);
      return result;
    }
  }
  throw std::runtime_error("rank_centrality: power iteration did not converge");
}

}  // namespace kaczrank
