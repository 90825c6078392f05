#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "cmholes/error.hpp"

namespace cmholes {

enum class StepKind : std::uint8_t { new_component, backtrack, advance };

// Stack height after every exploration event. heights[0] = 0 and
// events[n - 1] is the event that produced heights[n].
struct ContourProcess {
  std::vector<std::int32_t> heights{0};
  std::vector<StepKind> events;

  std::size_t steps() const { return events.size(); }

  std::int32_t max_height() const { return *std::max_element(heights.begin(), heights.end()); }

  std::size_t first_argmax() const {
    return static_cast<std::size_t>(std::max_element(heights.begin(), heights.end()) - heights.begin());
  }

  // Start and end (inclusive) of the excursion above zero containing `state`.
  std::pair<std::size_t, std::size_t> excursion_around(std::size_t state) const {
    std::size_t lo = state;
    while (lo > 0 && heights[lo] > 0) --lo;
    std::size_t hi = state;
    while (hi + 1 < heights.size() && heights[hi] > 0) ++hi;
    return {lo, hi};
  }
};

// T_0 = 0 and T_{k+1} is the first i > T_k with X_i = k + 1 and X_j >= k + 1
// for every j in [i, i + window]. Windows running past the end of the
// contour do not qualify. Stops at the first k with no admissible time.
inline std::vector<std::int64_t> ladder_times_with_window(std::span<const std::int32_t> heights,
                                                          std::int64_t window) {
  if (window < 0) throw DomainViolation("negative ladder window");
  std::vector<std::int64_t> times{0};
  const auto last = static_cast<std::int64_t>(heights.size()) - 1;
  std::int64_t k = 0;
  std::int64_t i = 1;
  while (true) {
    const auto level = static_cast<std::int32_t>(k + 1);
    bool found = false;
    while (i + window <= last) {
      if (heights[i] != level) {
        ++i;
        continue;
      }
      std::int64_t j = i;
      while (j <= i + window && heights[j] >= level) ++j;
      if (j > i + window) {
        found = true;
        break;
      }
      // Any later candidate before j also has j inside its window.
      i = j + 1;
    }
    if (!found) break;
    times.push_back(i);
    ++k;
    ++i;
  }
  return times;
}

inline std::int64_t ladder_window(std::size_t n_vertices, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw DomainViolation("delta must lie in (0, 1/2)");
  return static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n_vertices), delta)));
}

// Window N^delta with N read off the contour length (2N steps).
inline std::vector<std::int64_t> compute_ladder_times(const ContourProcess& contour, double delta) {
  return ladder_times_with_window(contour.heights, ladder_window(contour.steps() / 2, delta));
}

}  // namespace cmholes
