#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <random>
#include <vector>

#include "cmholes/graph/multigraph.hpp"

namespace oracle {

using cmholes::HalfEdgeId;
using cmholes::MultiGraph;
using cmholes::VertexId;

inline std::vector<std::vector<bool>> adjacency_matrix(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges())
    if (u != v) a[u][v] = a[v][u] = true;
  return a;
}

inline std::vector<std::vector<int>> all_pairs_distances(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, INT_MAX));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < n; ++y)
        if (a[x][y] && d[s][y] == INT_MAX) {
          d[s][y] = d[s][x] + 1;
          q.push(y);
        }
    }
  }
  return d;
}

inline bool distinct_in_range(const MultiGraph& g, const std::vector<VertexId>& vs) {
  std::vector<VertexId> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (auto v : vs)
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) return false;
  return true;
}

// Pairs at walk distance k >= 2 must be at graph distance >= max(2, min(m, k));
// consecutive pairs must be adjacent.
inline bool m_separated(const MultiGraph& g, const std::vector<VertexId>& vs, int m, bool cyclic) {
  if (vs.empty() || (cyclic && vs.size() < 3) || !distinct_in_range(g, vs)) return false;
  const auto d = all_pairs_distances(g);
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      std::size_t k = j - i;
      if (cyclic) k = std::min(k, len - k);
      const int dist = d[vs[i]][vs[j]];
      if (k == 1) {
        if (dist != 1) return false;
      } else if (dist < std::max<int>(2, std::min<int>(m, static_cast<int>(k)))) {
        return false;
      }
    }
  return true;
}

// O(k^2) pairwise check against the edge set.
inline bool induced_walk(const MultiGraph& g, const std::vector<VertexId>& vs, bool cyclic) {
  if (vs.empty() || (cyclic && vs.size() < 3) || !distinct_in_range(g, vs)) return false;
  std::set<std::pair<VertexId, VertexId>> es;
  for (auto [u, v] : g.edges()) {
    es.emplace(u, v);
    es.emplace(v, u);
  }
  const std::size_t len = vs.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (cyclic && i == 0 && j == len - 1);
      if (es.count({vs[i], vs[j]}) != (consecutive ? 1u : 0u)) return false;
    }
  return true;
}

inline bool induced_path(const MultiGraph& g, const std::vector<VertexId>& vs) { return induced_walk(g, vs, false); }
inline bool induced_cycle(const MultiGraph& g, const std::vector<VertexId>& vs) { return induced_walk(g, vs, true); }

// Every perfect matching of 2k half-edges, as partner arrays.
inline std::vector<std::vector<HalfEdgeId>> all_matchings(std::size_t half_edges) {
  std::vector<std::vector<HalfEdgeId>> out;
  std::vector<HalfEdgeId> partner(half_edges, -1);
  auto rec = [&](auto&& self) -> void {
    const auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      out.push_back(partner);
      return;
    }
    const auto a = static_cast<HalfEdgeId>(it - partner.begin());
    for (HalfEdgeId b = a + 1; b < static_cast<HalfEdgeId>(half_edges); ++b) {
      if (partner[b] != -1) continue;
      partner[a] = b;
      partner[b] = a;
      self(self);
      partner[a] = partner[b] = -1;
    }
  };
  rec(rec);
  return out;
}

inline std::vector<HalfEdgeId> pairing_of(const MultiGraph& g) { return {g.pairing().begin(), g.pairing().end()}; }

// Random multigraph on n vertices with about `edges` edges, loops allowed.
template <class URBG>
MultiGraph random_graph(std::size_t n, std::size_t edges, URBG& rng) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < edges; ++i) es.emplace_back(pick(rng), pick(rng));
  return MultiGraph::from_edges(n, es);
}

// Random vertex list: a random walk (often a path-like candidate) or random vertices.
template <class URBG>
std::vector<VertexId> random_list(const MultiGraph& g, std::size_t len, URBG& rng) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
  std::vector<VertexId> vs{pick(rng)};
  const bool walk = std::bernoulli_distribution(0.7)(rng);
  while (vs.size() < len) {
    const auto nb = g.neighbors(vs.back());
    if (walk && !nb.empty()) {
      vs.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
    } else {
      vs.push_back(pick(rng));
    }
  }
  return vs;
}

}  // namespace oracle
