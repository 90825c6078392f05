#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/explore/induced_dfs.hpp"

namespace cmholes {

// Counts of sleeping vertices by number of unmatched half-edges at tau(alpha).
inline std::vector<std::int64_t> remaining_degree_counts(const ExplorationResult& res, double alpha) {
  return res.sleeping.histogram_at(tau(res, alpha));
}

// Same, normalized to a pmf.
inline std::vector<double> remaining_degree_histogram(const ExplorationResult& res, double alpha) {
  const auto counts = remaining_degree_counts(res, alpha);
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw DomainViolation("no sleeping vertices left at tau(alpha)");
  std::vector<double> pmf(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) pmf[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  return pmf;
}

// Total variation distance between two pmfs; missing entries count as zero.
inline double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  const std::size_t n = std::max(p.size(), q.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

}  // namespace cmholes
