#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/explore/induced_dfs.hpp"
#include "cmholes/graph/induced.hpp"

namespace cmholes {

// Looks for an induced cycle p_i .. p_j, u, u' closing the spine p through two
// outside vertices: u hangs off p_j near the top (j >= H - 1 - eps N), u'
// hangs off p_i near the bottom (i <= eps N). Candidates are scanned from the
// top of the spine down and every hit is confirmed by is_induced_cycle.
inline std::optional<std::vector<VertexId>> close_induced_cycle(const ExplorationResult& res, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw DomainViolation("eps must lie in (0, 1]");
  const auto& spine = res.spine;
  const auto h = static_cast<std::int64_t>(spine.size());
  if (h < 3 || static_cast<double>(h) < 3.0 / eps) return std::nullopt;
  const auto& g = res.graph;
  const auto reach = static_cast<std::int64_t>(std::floor(eps * static_cast<double>(res.n_vertices)));

  std::vector<std::int64_t> pos(g.num_vertices(), -1);
  for (std::int64_t k = 0; k < h; ++k) pos[spine[k]] = k;

  const std::int64_t lowest_top = std::max<std::int64_t>(2, h - 1 - reach);
  for (std::int64_t j = h - 1; j >= lowest_top; --j) {
    for (VertexId u : g.neighbors(spine[j])) {
      if (pos[u] >= 0) continue;
      for (VertexId up : g.neighbors(u)) {
        if (up == u || pos[up] >= 0) continue;
        std::int64_t i = -1;
        g.for_each_neighbor(up, [&](VertexId x) {
          if (pos[x] >= 0 && pos[x] <= j) i = std::max(i, pos[x]);
        });
        if (i < 0 || i > reach || j - i < 2) continue;
        // u may touch the spine only at p_j inside the cycle.
        bool blocked = false;
        g.for_each_neighbor(u, [&](VertexId x) {
          if (pos[x] >= i && pos[x] < j) blocked = true;
        });
        if (blocked) continue;
        std::vector<VertexId> cycle(spine.begin() + i, spine.begin() + j + 1);
        cycle.push_back(u);
        cycle.push_back(up);
        if (is_induced_cycle(g, cycle)) return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace cmholes
