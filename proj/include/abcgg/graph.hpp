#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abcgg/error.hpp"

namespace abcgg {

using Vertex = std::uint32_t;

// Unordered vertex pair. Graph stores edges normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Counts for one oriented edge (u,v): vertices strictly closer to u, and
// strictly closer to v. Equidistant vertices are counted in neither.
struct ProximityPair {
  std::size_t n_u = 0;
  std::size_t n_v = 0;

  constexpr ProximityPair swapped() const { return {n_v, n_u}; }
  friend constexpr bool operator==(const ProximityPair&, const ProximityPair&) = default;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Immutable simple undirected graph on the dense vertex set 0..n-1.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  // Lexicographically sorted, each with u < v.
  std::span<const Edge> edges() const noexcept { return edges_; }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
  }

  void check_vertex(Vertex v) const {
    if (v >= num_vertices()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " with num_vertices " +
                      std::to_string(num_vertices()));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

  // Validates and builds. Edge order and orientation in the input are irrelevant.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edge_list) {
    Graph g;
    g.edges_.reserve(edge_list.size());
    for (const Edge& e : edge_list) {
      for (Vertex w : {e.u, e.v}) {
        if (w >= num_vertices) {
          throw Error(ErrorKind::VertexOutOfRange,
                      "vertex " + std::to_string(w) + " with num_vertices " +
                          std::to_string(num_vertices));
        }
      }
      if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(e.u));
      g.edges_.push_back(e.normalized());
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    g.adjacency_.assign(num_vertices, {});
    for (const Edge& e : g.edges_) {
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    return g;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph build_graph(std::size_t num_vertices, std::span<const Edge> edge_list) {
  return Graph::from_edges(num_vertices, edge_list);
}

inline Graph build_graph(std::size_t num_vertices, const std::vector<Edge>& edge_list) {
  return build_graph(num_vertices, std::span<const Edge>(edge_list));
}

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

// Hop counts from `source`; kUnreachable for vertices in other components.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::uint32_t d) { return d == kUnreachable; });
}

inline void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, std::string(what));
}

namespace detail {

inline ProximityPair proximity_from_distances(std::span<const std::uint32_t> from_u,
                                              std::span<const std::uint32_t> from_v) {
  ProximityPair p;
  for (std::size_t w = 0; w < from_u.size(); ++w) {
    if (from_u[w] < from_v[w]) ++p.n_u;
    else if (from_v[w] < from_u[w]) ++p.n_v;
  }
  return p;
}

// Caller guarantees connectivity and edge presence.
inline ProximityPair proximity_unchecked(const Graph& g, Vertex u, Vertex v) {
  const auto du = bfs_distances(g, u);
  const auto dv = bfs_distances(g, v);
  return proximity_from_distances(du, dv);
}

}  // namespace detail

inline ProximityPair edge_proximity(const Graph& g, Edge edge) {
  g.check_vertex(edge.u);
  g.check_vertex(edge.v);
  if (!g.has_edge(edge.u, edge.v)) {
    throw Error(ErrorKind::EdgeNotPresent,
                "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")");
  }
  require_connected(g, "edge_proximity needs a connected graph");
  return detail::proximity_unchecked(g, edge.u, edge.v);
}

// One pair per edge, in edge order, oriented as stored (u < v).
inline std::vector<ProximityPair> proximity_pairs(const Graph& g) {
  require_connected(g, "proximity counts need a connected graph");
  std::vector<ProximityPair> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.push_back(detail::proximity_unchecked(g, e.u, e.v));
  return out;
}

inline Graph remove_edge(const Graph& g, Edge edge) {
  const Edge target = edge.normalized();
  if (!g.has_edge(target.u, target.v)) {
    throw Error(ErrorKind::EdgeNotPresent,
                "(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")");
  }
  std::vector<Edge> kept;
  kept.reserve(g.num_edges() - 1);
  for (const Edge& e : g.edges()) {
    if (e != target) kept.push_back(e);
  }
  return build_graph(g.num_vertices(), kept);
}

// Vertices above `v` shift down by one.
inline Graph remove_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const auto shift = [v](Vertex w) { return w < v ? w : w - 1; };
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) kept.push_back({shift(e.u), shift(e.v)});
  }
  return build_graph(g.num_vertices() - 1, kept);
}

// g2's vertices are appended after g1's.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto offset = static_cast<Vertex>(g1.num_vertices());
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back({e.u + offset, e.v + offset});
  return build_graph(g1.num_vertices() + g2.num_vertices(), edges);
}

// Components ordered by smallest vertex; vertices ascending within each.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(g.num_vertices(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    const auto dist = bfs_distances(g, s);
    auto& comp = out.emplace_back();
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      if (dist[w] != kUnreachable) {
        comp.push_back(w);
        seen[w] = 1;
      }
    }
  }
  return out;
}

// `vertices` must be sorted ascending; they are renumbered 0..k-1 in that order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.num_vertices(), kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.check_vertex(vertices[i]);
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != kUnreachable && index[e.v] != kUnreachable) {
      edges.push_back({index[e.u], index[e.v]});
    }
  }
  return build_graph(vertices.size(), edges);
}

}  // namespace abcgg
