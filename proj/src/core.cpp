#include "kaczrank/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kaczrank {

std::vector<int> Ranking::positions() const {
  std::vector<int> pos(order.size());
  for (int place = 0; place < size(); ++place) {
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(place)])] = place;
  }
  return pos;
}

bool Ranking::is_valid() const {
  std::vector<bool> seen(order.size(), false);
  for (int item : order) {
    if (item < 0 || item >= size() || seen[static_cast<std::size_t>(item)]) return false;
    seen[static_cast<std::size_t>(item)] = true;
  }
  return true;
}

Ranking Ranking::identity(int n) {
  Ranking r;
  r.order.resize(static_cast<std::size_t>(n));
  std::iota(r.order.begin(), r.order.end(), 0);
  return r;
}

void check_comparison(const Comparison& c, int n) {
  if (c.low < 0 || c.low >= n || c.high < 0 || c.high >= n) {
    throw std::invalid_argument("comparison (" + std::to_string(c.low) + "," +
                                std::to_string(c.high) + ") out of range for n=" +
                                std::to_string(n));
  }
  if (c.low == c.high) {
    throw std::invalid_argument("comparison may not relate an item to itself: " +
                                std::to_string(c.low));
  }
}

void check_system(const ComparisonSystem& sys) {
  if (sys.item_count < 2) {
    throw std::invalid_argument("a system needs at least two items");
  }
  if (!(sys.epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  for (const Comparison& c : sys.comparisons) check_comparison(c, sys.item_count);
}

std::vector<double> comparison_row(const Comparison& c, int n) {
  check_comparison(c, n);
  std::vector<double> row(static_cast<std::size_t>(n), 0.0);
  row[static_cast<std::size_t>(c.low)] = 1.0;
  row[static_cast<std::size_t>(c.high)] = -1.0;
  return row;
}

double residual(const Comparison& c, const ScoreVector& x, double epsilon) {
  check_comparison(c, static_cast<int>(x.size()));
  return x[static_cast<std::size_t>(c.low)] - x[static_cast<std::size_t>(c.high)] + epsilon;
}

Ranking ranking_from_scores(const ScoreVector& x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("scores must be finite");
  }
  Ranking r = Ranking::identity(static_cast<int>(x.size()));
  std::sort(r.order.begin(), r.order.end(), [&x](int a, int b) {
    double xa = x[static_cast<std::size_t>(a)];
    double xb = x[static_cast<std::size_t>(b)];
    if (xa != xb) return xa > xb;
    return a < b;
  });
  return r;
}

ScoreVector feasible_point(const Ranking& r, double epsilon) {
  if (!r.is_valid()) throw std::invalid_argument("invalid ranking");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int n = r.size();
  ScoreVector s(static_cast<std::size_t>(n), 0.0);
  for (int place = 0; place < n; ++place) {
    s[static_cast<std::size_t>(r.order[static_cast<std::size_t>(place)])] =
        static_cast<double>(n - 1 - place) * epsilon;
  }
  return s;
}

bool verify_feasible(const ScoreVector& x, const ComparisonSystem& sys) {
  if (static_cast<int>(x.size()) != sys.item_count) {
    throw std::invalid_argument("score vector length does not match the system");
  }
  for (const Comparison& c : sys.comparisons) {
    if (residual(c, x, sys.epsilon) > 0.0) return false;
  }
  return true;
}

}  // namespace kaczrank
