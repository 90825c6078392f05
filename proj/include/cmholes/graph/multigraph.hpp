#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cmholes/error.hpp"
#include "cmholes/graph/degree.hpp"

namespace cmholes {

// Half-edge representation of a multigraph. Half-edges of vertex v occupy the
// contiguous id range [offset(v), offset(v + 1)); partner() is the matching.
// Self-loops and parallel edges are allowed. Immutable once built.
class MultiGraph {
 public:
  MultiGraph() : offsets_(1, 0) {}

  // partner[h] must be a fixed-point-free involution on [0, sum degrees).
  MultiGraph(const std::vector<int>& degrees, std::vector<HalfEdgeId> partner)
      : offsets_(degrees.size() + 1, 0), partner_(std::move(partner)) {
    for (std::size_t v = 0; v < degrees.size(); ++v) offsets_[v + 1] = offsets_[v] + degrees[v];
    if (static_cast<std::size_t>(offsets_.back()) != partner_.size())
      throw DomainViolation("pairing size does not match degree total");
    owner_.resize(partner_.size());
    for (std::size_t v = 0; v < degrees.size(); ++v)
      std::fill(owner_.begin() + offsets_[v], owner_.begin() + offsets_[v + 1], static_cast<VertexId>(v));
    if (!is_involution()) throw DomainViolation("pairing is not a fixed-point-free involution");
  }

  static MultiGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<int> degrees(n, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw DomainViolation("edge endpoint out of range");
      ++degrees[u];
      ++degrees[v];
    }
    std::vector<HalfEdgeId> next(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) next[v + 1] = next[v] + degrees[v];
    std::vector<HalfEdgeId> partner(static_cast<std::size_t>(next[n]));
    for (auto [u, v] : edges) {
      const HalfEdgeId a = next[u]++;
      const HalfEdgeId b = next[v]++;
      partner[a] = b;
      partner[b] = a;
    }
    return MultiGraph(degrees, std::move(partner));
  }

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_half_edges() const { return partner_.size(); }
  std::size_t num_edges() const { return partner_.size() / 2; }

  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  HalfEdgeId offset(VertexId v) const { return offsets_[v]; }
  HalfEdgeId partner(HalfEdgeId h) const { return partner_[h]; }
  VertexId vertex_of(HalfEdgeId h) const { return owner_[h]; }
  std::span<const HalfEdgeId> pairing() const { return partner_; }

  // Neighbors with multiplicity; a self-loop reports v twice.
  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    for (HalfEdgeId h = offsets_[v]; h < offsets_[v + 1]; ++h) f(owner_[partner_[h]]);
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_each_neighbor(v, [&](VertexId w) { out.push_back(w); });
    return out;
  }

  bool adjacent(VertexId u, VertexId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    for (HalfEdgeId h = offsets_[u]; h < offsets_[u + 1]; ++h)
      if (owner_[partner_[h]] == v) return true;
    return false;
  }

  // Each edge once, as (vertex_of(h), vertex_of(partner(h))) with h < partner(h).
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges());
    for (HalfEdgeId h = 0; h < static_cast<HalfEdgeId>(partner_.size()); ++h)
      if (h < partner_[h]) out.emplace_back(owner_[h], owner_[partner_[h]]);
    return out;
  }

  bool is_involution() const {
    const auto m = static_cast<HalfEdgeId>(partner_.size());
    for (HalfEdgeId h = 0; h < m; ++h) {
      const HalfEdgeId p = partner_[h];
      if (p < 0 || p >= m || p == h || partner_[p] != h) return false;
    }
    return true;
  }

 private:
  std::vector<HalfEdgeId> offsets_;
  std::vector<HalfEdgeId> partner_;
  std::vector<VertexId> owner_;
};

// Uniform perfect matching of the half-edges: shuffle, then pair neighbours.
template <class URBG>
MultiGraph build_configuration_model(const DegreeSequence& seq, URBG& rng) {
  if (seq.total_half_edges % 2 != 0) throw DomainViolation("odd number of half-edges");
  const auto m = static_cast<HalfEdgeId>(seq.total_half_edges);
  std::vector<HalfEdgeId> order(static_cast<std::size_t>(m));
  for (HalfEdgeId h = 0; h < m; ++h) order[h] = h;
  for (HalfEdgeId i = m - 1; i > 0; --i) {
    std::uniform_int_distribution<HalfEdgeId> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  std::vector<HalfEdgeId> partner(static_cast<std::size_t>(m));
  for (HalfEdgeId i = 0; i + 1 < m; i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  return MultiGraph(seq.degrees, std::move(partner));
}

// G(N, c/N): every unordered pair independently present with probability c/N.
// Uses geometric skips over the pair enumeration, so the cost is O(N + edges).
template <class URBG>
MultiGraph build_er_graph(std::size_t n, double c, URBG& rng) {
  if (n < 2) throw DomainViolation("N must be at least 2");
  if (!(c > 0.0)) throw DomainViolation("c must be positive");
  const double p = c / static_cast<double>(n);
  if (p > 1.0) throw DomainViolation("connection probability c/N exceeds 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (p == 1.0) {
    for (std::size_t v = 1; v < n; ++v)
      for (std::size_t w = 0; w < v; ++w) edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    return MultiGraph::from_edges(n, edges);
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = unif(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
  }
  return MultiGraph::from_edges(n, edges);
}

// "u v" per line, self-loop as "u u".
inline void write_edge_list(std::ostream& out, const MultiGraph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline MultiGraph read_edge_list(std::istream& in, std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long u = 0;
  long long v = 0;
  while (in >> u >> v) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  if (!in.eof()) throw ConfigError("malformed edge list");
  return MultiGraph::from_edges(n, edges);
}

}  // namespace cmholes
