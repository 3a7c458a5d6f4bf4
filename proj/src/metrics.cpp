#include "kaczrank/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace kaczrank {

namespace {

void check_pair(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ranking length mismatch");
}

}  // namespace

int hamming(const Ranking& a, const Ranking& b) {
  check_pair(a, b);
  int count = 0;
  for (std::size_t i = 0; i < a.order.size(); ++i) {
    if (a.order[i] != b.order[i]) ++count;
  }
  return count;
}

int k_distance(const Ranking& a, const Ranking& b, int k) {
  check_pair(a, b);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::vector<int> pa = a.positions();
  const std::vector<int> pb = b.positions();
  int count = 0;
  for (std::size_t item = 0; item < pa.size(); ++item) {
    if (std::abs(pa[item] - pb[item]) >= k) ++count;
  }
  return count;
}

std::int64_t kendall_tau(const Ranking& a, const Ranking& b) {
  check_pair(a, b);
  const std::vector<int> pa = a.positions();
  const std::vector<int> pb = b.positions();
  const int n = a.size();
  std::int64_t discordant = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool order_a = pa[static_cast<std::size_t>(i)] < pa[static_cast<std::size_t>(j)];
      const bool order_b = pb[static_cast<std::size_t>(i)] < pb[static_cast<std::size_t>(j)];
      if (order_a != order_b) ++discordant;
    }
  }
  return discordant;
}

int cayley(const Ranking& a, const Ranking& b) {
  check_pair(a, b);
  const std::vector<int> pb = b.positions();
  const int n = a.size();
  // sigma(place) = where b puts the item a has at `place`; count its cycles.
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int at = start;
    while (!visited[static_cast<std::size_t>(at)]) {
      visited[static_cast<std::size_t>(at)] = true;
      at = pb[static_cast<std::size_t>(a.order[static_cast<std::size_t>(at)])];
    }
  }
  return n - cycles;
}

double normalize(double distance, Metric metric, int n) {
  if (n < 2) throw std::invalid_argument("need at least two items");
  switch (metric) {
    case Metric::kHamming:
    case Metric::kKDistance:
      return distance / static_cast<double>(n);
    case Metric::kKendallTau:
      return distance / (static_cast<double>(n) * (n - 1) / 2.0);
    case Metric::kCayley:
      return distance / static_cast<double>(n - 1);
  }
  throw std::invalid_argument("unknown metric");
}

double distance_to_feasible(const ScoreVector& x, const ComparisonSystem& sys,
                            double tol) {
  check_system(sys);
  if (static_cast<int>(x.size()) != sys.item_count) {
    throw std::invalid_argument("score vector length does not match the system");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const std::vector<Comparison>& rows = sys.comparisons;
  ScoreVector z = x;
  // Dykstra corrections are scalar multiples of each row's +/-1 vector.
  std::vector<double> coeff(rows.size(), 0.0);
  const double move_cutoff = tol / 10.0;
  constexpr int kMaxCycles = 1000000;

  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    double max_move = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto low = static_cast<std::size_t>(rows[i].low);
      const auto high = static_cast<std::size_t>(rows[i].high);
      // Re-add the old correction, project, store the new correction.
      z[low] += coeff[i];
      z[high] -= coeff[i];
      const double r = z[low] - z[high] + sys.epsilon;
      const double next = r > 0.0 ? r / 2.0 : 0.0;
      z[low] -= next;
      z[high] += next;
      const double move = std::abs(coeff[i] - next) * std::sqrt(2.0);
      if (move > max_move) max_move = move;
      coeff[i] = next;
    }
    if (max_move < move_cutoff) {
      double sq = 0.0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        const double d = x[j] - z[j];
        sq += d * d;
      }
      return std::sqrt(sq);
    }
  }
  throw std::runtime_error("distance_to_feasible: Dykstra iteration did not settle");
}

}  // namespace kaczrank
