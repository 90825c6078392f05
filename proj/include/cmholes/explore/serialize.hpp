#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "cmholes/explore/induced_dfs.hpp"
#include "json.hpp"

namespace cmholes {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxContourRows = 100000;

// Signed run lengths of the +-1 increments: [3, -2, 1, ...].
inline std::vector<std::int64_t> contour_runs(const ContourProcess& c) {
  std::vector<std::int64_t> runs;
  for (std::size_t n = 1; n < c.heights.size(); ++n) {
    const std::int64_t d = c.heights[n] - c.heights[n - 1];
    if (!runs.empty() && (runs.back() > 0) == (d > 0))
      runs.back() += d;
    else
      runs.push_back(d);
  }
  return runs;
}

inline ContourProcess contour_from_runs(const std::vector<std::int64_t>& runs) {
  ContourProcess c;
  for (std::int64_t r : runs) {
    const int d = r > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (r > 0 ? r : -r); ++k) {
      c.heights.push_back(c.heights.back() + d);
      c.events.push_back(d > 0 ? StepKind::advance : StepKind::backtrack);
    }
  }
  return c;
}

// Turning points of the contour (plus both ends), thinned evenly if there are
// more than max_rows of them.
inline std::vector<std::size_t> contour_turning_points(const ContourProcess& c, std::size_t max_rows = kMaxContourRows) {
  std::vector<std::size_t> pts{0};
  const std::size_t last = c.heights.size() - 1;
  for (std::size_t n = 1; n < last; ++n)
    if ((c.heights[n] - c.heights[n - 1]) != (c.heights[n + 1] - c.heights[n])) pts.push_back(n);
  if (last > 0) pts.push_back(last);
  if (pts.size() > max_rows && max_rows >= 2) {
    std::vector<std::size_t> thin;
    thin.reserve(max_rows);
    for (std::size_t r = 0; r < max_rows; ++r) thin.push_back(pts[r * (pts.size() - 1) / (max_rows - 1)]);
    pts.swap(thin);
  }
  return pts;
}

inline void write_contour_csv(std::ostream& out, const ContourProcess& c, std::size_t max_rows = kMaxContourRows) {
  out << "step,height\n";
  for (std::size_t n : contour_turning_points(c, max_rows)) out << n << ',' << c.heights[n] << '\n';
}

inline Json to_json(const ExplorationResult& res) {
  Json j;
  j["n_vertices"] = res.n_vertices;
  j["seed"] = res.seed;
  j["m"] = res.m;
  j["delta"] = res.delta;
  j["max_height"] = res.empty() ? 0 : res.max_height();
  j["contour"] = {{"steps", res.contour.steps()}, {"runs", contour_runs(res.contour)}};
  j["spine"] = res.spine;
  Json ladder = Json::array();
  for (const auto& t : res.ladder_times) ladder.push_back({t.k, t.time, t.vertex});
  j["ladder_times"] = ladder;
  j["snapshots"] = res.snapshots;
  j["w"] = res.w;
  return j;
}

}  // namespace cmholes
