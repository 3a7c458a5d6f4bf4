#pragma once

#include <cstdint>
#include <vector>

namespace kaczrank {

/// Default slack used throughout when the caller does not choose one.
inline constexpr double kDefaultEpsilon = 1e-5;

/// One pairwise observation: the item `low` scores strictly below `high`.
/// Realized as the sparse row with +1 at `low` and -1 at `high`.
struct Comparison {
  int low = 0;
  int high = 0;

  Comparison flipped() const { return {high, low}; }

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// The feasibility system: n items, slack epsilon, and the observed
/// comparisons (duplicates permitted).
struct ComparisonSystem {
  int item_count = 0;
  double epsilon = kDefaultEpsilon;
  std::vector<Comparison> comparisons;
};

/// Solver iterate; entry i is the current score of item i.
using ScoreVector = std::vector<double>;

/// A permutation of {0,...,n-1} listed best-first.
struct Ranking {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }

  /// Inverse view: positions()[item] is the item's place, 0 = top.
  std::vector<int> positions() const;

  bool is_valid() const;

  static Ranking identity(int n);

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Throws std::invalid_argument unless low != high and both lie in [0, n).
void check_comparison(const Comparison& c, int n);

/// Throws std::invalid_argument on a bad item count, non-positive epsilon,
/// or any out-of-range comparison.
void check_system(const ComparisonSystem& sys);

/// Dense row vector for a comparison: +1 at c.low, -1 at c.high.
std::vector<double> comparison_row(const Comparison& c, int n);

/// Signed constraint violation x[low] - x[high] + epsilon. Positive means
/// the comparison is violated at x.
double residual(const Comparison& c, const ScoreVector& x, double epsilon);

/// Items sorted by score descending; ties broken by ascending item index.
Ranking ranking_from_scores(const ScoreVector& x);

/// A point of the feasible region for the given ranking: scores spaced
/// exactly epsilon apart, worst item at 0.
ScoreVector feasible_point(const Ranking& r, double epsilon);

/// True iff every comparison of the system holds at x with slack >= epsilon,
/// i.e. residual <= 0 exactly (a projection landing on the boundary counts).
bool verify_feasible(const ScoreVector& x, const ComparisonSystem& sys);

}  // namespace kaczrank
