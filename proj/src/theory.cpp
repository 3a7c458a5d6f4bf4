#include "kaczrank/theory.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kaczrank/core.hpp"
#include "kaczrank/sampling.hpp"

namespace kaczrank::theory {

namespace {

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

void check_p(double p) {
  if (p < 0.0 || p >= 0.5) {
    throw std::invalid_argument("flip probability p must lie in [0, 1/2)");
  }
}

double pair_count(int n) { return static_cast<double>(n) * (n - 1) / 2.0; }

// log of the probability of drawing one fixed N-step projection sequence:
// ((1-p) * 2 / (n(n-1)))^N.
double log_window_success(int n, double p) {
  const double N = pair_count(n);
  return N * (std::log1p(-p) + std::log(2.0) - std::log(static_cast<double>(n)) -
              std::log(static_cast<double>(n - 1)));
}

}  // namespace

bool BoundValue::representable() const { return std::isfinite(value); }

double contraction_rate(int n) {
  check_n(n);
  return 1.0 - 1.0 / static_cast<double>(n - 1);
}

double hoffman_bound(int n) {
  check_n(n);
  return 1.0 / std::sqrt(static_cast<double>(n));
}

double complete_graph_connectivity(int n) {
  check_n(n);
  if (n > 200) throw std::invalid_argument("connectivity check is capped at n=200");
  const std::vector<Comparison> all = full_comparison_set(n, Ranking::identity(n));
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(all.size()), n);
  for (std::size_t row = 0; row < all.size(); ++row) {
    q(static_cast<Eigen::Index>(row), all[row].low) = 1.0;
    q(static_cast<Eigen::Index>(row), all[row].high) = -1.0;
  }
  const Eigen::MatrixXd laplacian = q.transpose() * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Laplacian eigensolve failed");
  }
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double ev = solver.eigenvalues()(i);  // ascending
    if (ev > 1e-3) return ev;
  }
  throw std::runtime_error("no positive Laplacian eigenvalue found");
}

BoundValue expected_hit_bound(int n) { return expected_hit_bound_noisy(n, 0.0); }

BoundValue expected_hit_bound_noisy(int n, double p) {
  check_n(n);
  check_p(p);
  BoundValue bound;
  bound.log_value = std::log(pair_count(n) + 1.0) - log_window_success(n, p);
  bound.value = std::exp(bound.log_value);
  return bound;
}

double tail_bound(int n, std::int64_t k, double p) {
  check_n(n);
  check_p(p);
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const auto window = static_cast<std::int64_t>(pair_count(n)) + 1;
  const std::int64_t exponent = k / window;
  if (exponent == 0) return 1.0;
  const double q = std::exp(log_window_success(n, p));
  if (q >= 1.0) return 0.0;  // success certain within one window (n = 2, p = 0)
  return std::exp(static_cast<double>(exponent) * std::log1p(-q));
}

double coupon_with_replacement(int n) {
  check_n(n);
  double harmonic = 0.0;
  for (int i = 1; i <= n - 1; ++i) harmonic += 1.0 / static_cast<double>(i);
  return pair_count(n) * harmonic;
}

double coupon_without_replacement(int n) {
  check_n(n);
  return static_cast<double>(n - 1) *
         (static_cast<double>(n) / 2.0 - 0.5 + 1.0 / static_cast<double>(n));
}

double last_zero_position(std::int64_t ones, std::int64_t zeros) {
  if (zeros < 1) throw std::invalid_argument("need at least one zero");
  if (ones < 0) throw std::invalid_argument("ones must be non-negative");
  return static_cast<double>(ones) + static_cast<double>(zeros) -
         static_cast<double>(ones) / static_cast<double>(zeros + 1);
}

}  // namespace kaczrank::theory
