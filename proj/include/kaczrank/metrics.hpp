#pragma once

#include <cstdint>

#include "kaczrank/core.hpp"

namespace kaczrank {

/// Number of positions at which the two rankings disagree. Range [0, n],
/// never exactly 1.
int hamming(const Ranking& a, const Ranking& b);

/// Number of items displaced by at least k places between the rankings
/// ("within k places" reads strictly: |displacement| < k counts as within,
/// so k=1 coincides with Hamming).
int k_distance(const Ranking& a, const Ranking& b, int k);

/// Number of item pairs the two rankings order differently (bubble-sort
/// distance). Pair counting, O(n^2); fine at desk scale.
std::int64_t kendall_tau(const Ranking& a, const Ranking& b);

/// Minimum number of transpositions carrying a to b: n minus the cycle
/// count of the relating permutation.
int cayley(const Ranking& a, const Ranking& b);

enum class Metric { kHamming, kKDistance, kKendallTau, kCayley };

/// Divides a raw distance by the metric's maximum for n items, mapping it
/// into [0, 1]: n for Hamming/k-distance, n(n-1)/2 for Kendall tau, n-1 for
/// Cayley.
double normalize(double distance, Metric metric, int n);

/// Euclidean distance from x to the feasible region {Qx <= -eps}, computed
/// by Dykstra's cyclic corrected-projection scheme. Iterates until no
/// projection in a full cycle moves the point by more than tol/10; throws
/// if that never happens within the internal cycle cap. The system must be
/// consistent (orientable by some ranking).
double distance_to_feasible(const ScoreVector& x, const ComparisonSystem& sys,
                            double tol);

}  // namespace kaczrank
