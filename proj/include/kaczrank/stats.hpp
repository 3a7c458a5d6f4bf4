#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kaczrank {

/// Empirical quantile with the midpoint convention: when p*count lands on an
/// integer boundary the two straddling order statistics are averaged,
/// otherwise the lower one is taken. For 20 trials the median is
/// (v[9]+v[10])/2 and the quartiles are (v[4]+v[5])/2 and (v[14]+v[15])/2.
inline double quantile(std::vector<double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile of no values");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = p * static_cast<double>(values.size());
  const auto lower = static_cast<std::size_t>(h);
  if (h == static_cast<double>(lower) && lower > 0) {
    if (lower >= values.size()) return values.back();
    return 0.5 * (values[lower - 1] + values[lower]);
  }
  return values[std::min(lower, values.size() - 1)];
}

inline double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

}  // namespace kaczrank
