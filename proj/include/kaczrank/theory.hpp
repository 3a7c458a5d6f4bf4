#pragma once

#include <cstdint>

namespace kaczrank::theory {

/// A bound that may be astronomically large: the natural log is always
/// exact-ish; `value` is exp(log_value) and overflows to infinity when the
/// bound is not representable in a double.
struct BoundValue {
  double log_value = 0.0;
  double value = 0.0;

  bool representable() const;
};

/// Per-iteration contraction factor of the expected squared distance to the
/// feasible region under uniform full-set sampling: 1 - n/(2m) = 1 - 1/(n-1).
double contraction_rate(int n);

/// Upper bound 1/sqrt(n) on the Hoffman constant of the full system.
double hoffman_bound(int n);

/// Smallest positive eigenvalue of the complete-graph Laplacian, computed
/// numerically from the full comparison matrix as Q^T Q. Equals n. Dense
/// eigensolve; n is capped at 200.
double complete_graph_connectivity(int n);

/// Expected iterations to reach the feasible region, full noiseless set:
/// (N+1) n^N (n-1)^N / 2^N with N = n(n-1)/2.
BoundValue expected_hit_bound(int n);

/// Same bound under flip noise p: divide by (1-p)^N.
BoundValue expected_hit_bound_noisy(int n, double p);

/// Tail bound P(tau >= k) <= (1 - (1-p)^N 2^N / (n^N (n-1)^N))^floor(k/(N+1)),
/// evaluated in log space; p = 0 gives the noiseless bound.
double tail_bound(int n, std::int64_t k, double p);

/// Expected with-replacement draws from the full set until all n-1 backbone
/// comparisons have been seen: N * sum_{i=1}^{n-1} 1/i.
double coupon_with_replacement(int n);

/// Expected without-replacement draws until the backbone is complete:
/// (n-1)(n/2 - 1/2 + 1/n).
double coupon_without_replacement(int n);

/// Expected position of the last zero in a uniformly random binary string
/// with the given counts: ones + zeros - ones/(zeros+1).
double last_zero_position(std::int64_t ones, std::int64_t zeros);

}  // namespace kaczrank::theory
