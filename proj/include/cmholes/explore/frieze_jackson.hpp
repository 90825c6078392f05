#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/explore/induced_dfs.hpp"
#include "cmholes/graph/multigraph.hpp"

namespace cmholes {

// Greedy induced DFS: untried neighbours are taken in increasing rank; a
// newly discovered vertex adjacent to a vertex of the current line other than
// its parent is deleted for good. Returns the deepest line reached (first
// time that depth is attained). Vertices with negative rank are never entered.
inline std::vector<VertexId> run_frieze_jackson(const MultiGraph& g, VertexId start,
                                                std::span<const std::int64_t> rank) {
  const std::size_t n = g.num_vertices();
  if (start < 0 || static_cast<std::size_t>(start) >= n) throw DomainViolation("start vertex not in graph");
  if (rank.size() != n) throw DomainViolation("rank must cover every vertex");

  enum class Mark : std::uint8_t { fresh, on_line, done, deleted };
  std::vector<Mark> mark(n, Mark::fresh);
  struct Frame {
    VertexId vertex;
    std::size_t begin, end, next;
  };
  std::vector<VertexId> order;  // arena of sorted neighbour lists
  std::vector<Frame> line;
  std::vector<VertexId> best;
  std::size_t synced = 0;  // best and line agree on this prefix

  auto enter = [&](VertexId v) {
    mark[v] = Mark::on_line;
    const std::size_t begin = order.size();
    g.for_each_neighbor(v, [&](VertexId w) {
      if (w != v) order.push_back(w);
    });
    auto first = order.begin() + static_cast<std::ptrdiff_t>(begin);
    std::sort(first, order.end(), [&](VertexId a, VertexId b) { return rank[a] != rank[b] ? rank[a] < rank[b] : a < b; });
    order.erase(std::unique(first, order.end()), order.end());
    line.push_back({v, begin, order.size(), begin});
    if (line.size() > best.size()) {
      best.resize(synced);
      for (std::size_t i = synced; i < line.size(); ++i) best.push_back(line[i].vertex);
      synced = line.size();
    }
  };

  enter(start);
  while (!line.empty()) {
    Frame& top = line.back();
    if (top.next == top.end) {
      mark[top.vertex] = Mark::done;
      order.resize(top.begin);
      line.pop_back();
      synced = std::min(synced, line.size());
      continue;
    }
    const VertexId y = order[top.next++];
    if (mark[y] != Mark::fresh || rank[y] < 0) continue;
    bool chord = false;
    g.for_each_neighbor(y, [&](VertexId z) {
      if (z != top.vertex && mark[z] == Mark::on_line) chord = true;
    });
    if (chord) {
      mark[y] = Mark::deleted;
      continue;
    }
    enter(y);
  }
  return best;
}

// Rank of each vertex by its first appearance on the exploration's stack.
inline std::vector<std::int64_t> push_order(const ExplorationResult& res) { return res.push_state; }

// Length of the common prefix divided by the length of `reference`.
inline double prefix_agreement(std::span<const VertexId> candidate, std::span<const VertexId> reference) {
  if (reference.empty()) return candidate.empty() ? 1.0 : 0.0;
  const auto mm = std::mismatch(candidate.begin(), candidate.end(), reference.begin(), reference.end());
  return static_cast<double>(mm.second - reference.begin()) / static_cast<double>(reference.size());
}

}  // namespace cmholes
