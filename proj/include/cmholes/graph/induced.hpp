#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <unordered_map>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/graph/multigraph.hpp"

namespace cmholes {

namespace detail {

// Maps each listed vertex to its index; false on out-of-range ids or repeats.
inline bool index_positions(const MultiGraph& g, std::span<const VertexId> vs,
                            std::unordered_map<VertexId, std::size_t>& pos) {
  pos.clear();
  pos.reserve(vs.size() * 2);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || static_cast<std::size_t>(vs[i]) >= g.num_vertices()) return false;
    if (!pos.emplace(vs[i], i).second) return false;
  }
  return true;
}

inline std::size_t walk_distance(std::size_t i, std::size_t j, std::size_t len, bool cyclic) {
  const std::size_t d = i > j ? i - j : j - i;
  return cyclic ? std::min(d, len - d) : d;
}

// Vertices at walk distance k must sit at graph distance >= min(k, reach + 1).
// reach = 1 is the plain induced condition. Checked by a depth-limited BFS
// from every listed vertex.
inline bool separated_walk(const MultiGraph& g, std::span<const VertexId> vs, int reach, bool cyclic) {
  if (vs.empty()) return false;
  if (cyclic && vs.size() < 3) return false;
  std::unordered_map<VertexId, std::size_t> pos;
  if (!index_positions(g, vs, pos)) return false;
  const std::size_t len = vs.size();
  const std::size_t links = cyclic ? len : len - 1;
  for (std::size_t i = 0; i < links; ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % len])) return false;

  std::unordered_map<VertexId, int> dist;
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  for (std::size_t i = 0; i < len; ++i) {
    dist.clear();
    dist.emplace(vs[i], 0);
    frontier.assign(1, vs[i]);
    for (int d = 1; d <= reach && !frontier.empty(); ++d) {
      next.clear();
      for (VertexId x : frontier) {
        bool bad = false;
        g.for_each_neighbor(x, [&](VertexId y) {
          if (bad || !dist.emplace(y, d).second) return;
          next.push_back(y);
          if (auto it = pos.find(y); it != pos.end() && walk_distance(i, it->second, len, cyclic) > static_cast<std::size_t>(d))
            bad = true;
        });
        if (bad) return false;
      }
      frontier.swap(next);
    }
  }
  return true;
}

}  // namespace detail

// Distinct vertices, consecutive ones adjacent, no other adjacency among them.
// Parallel edges count once and self-loops are ignored.
inline bool is_induced_path(const MultiGraph& g, std::span<const VertexId> vs) {
  return detail::separated_walk(g, vs, 1, false);
}

// Cyclic version; at least three vertices.
inline bool is_induced_cycle(const MultiGraph& g, std::span<const VertexId> vs) {
  return detail::separated_walk(g, vs, 1, true);
}

// An induced path in which two vertices k steps apart are at graph distance
// at least min(m, k). m = 1 and m = 2 both reduce to is_induced_path.
inline bool is_m_induced_path(const MultiGraph& g, std::span<const VertexId> vs, int m) {
  if (m < 1) throw DomainViolation("m must be at least 1");
  return detail::separated_walk(g, vs, std::max(m - 1, 1), false);
}

inline bool is_m_induced_cycle(const MultiGraph& g, std::span<const VertexId> vs, int m) {
  if (m < 1) throw DomainViolation("m must be at least 1");
  return detail::separated_walk(g, vs, std::max(m - 1, 1), true);
}

}  // namespace cmholes
