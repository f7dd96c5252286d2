#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abcgg/error.hpp"
#include "abcgg/graph.hpp"

// Point-attaching compositions. Output numbering is deterministic: parts are
// laid out left to right in input order, each part keeps its internal order,
// and a merged vertex takes the index it already had in the earlier part.

namespace abcgg {

// A graph with an entry anchor x and an exit anchor y. Bouquet and circuit
// only read x; link and chain read both.
struct AnchoredGraph {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;

  AnchoredGraph(Graph g, Vertex anchor) : graph(std::move(g)), x(anchor), y(anchor) {}
  AnchoredGraph(Graph g, Vertex entry, Vertex exit)
      : graph(std::move(g)), x(entry), y(exit) {}
};

// A composed graph together with the image of every part vertex:
// placement[i][w] is where vertex w of part i ended up.
struct Composition {
  Graph graph;
  std::vector<std::vector<Vertex>> placement;

  Vertex image(std::size_t part, Vertex w) const { return placement.at(part).at(w); }
};

namespace detail {

inline void check_anchors(std::span<const AnchoredGraph> parts) {
  for (const auto& p : parts) {
    p.graph.check_vertex(p.x);
    p.graph.check_vertex(p.y);
  }
}

inline Graph build_composed(std::size_t num_vertices, const std::vector<Edge>& edges) {
  try {
    return build_graph(num_vertices, edges);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DuplicateEdge) {
      throw Error(ErrorKind::DuplicateEdgeCreated, e.what());
    }
    throw;
  }
}

// Appends `part` to an accumulating edge list. `merge_with` (if not
// kUnreachable) is the existing index that part vertex `merge_at` collapses to.
inline std::vector<Vertex> append_part(const Graph& part, Vertex merge_at, Vertex merge_with,
                                       std::size_t& num_vertices, std::vector<Edge>& edges) {
  std::vector<Vertex> map(part.num_vertices());
  for (Vertex w = 0; w < part.num_vertices(); ++w) {
    if (merge_with != kUnreachable && w == merge_at) {
      map[w] = merge_with;
    } else {
      map[w] = static_cast<Vertex>(num_vertices++);
    }
  }
  for (const Edge& e : part.edges()) edges.push_back({map[e.u], map[e.v]});
  return map;
}

}  // namespace detail

// |V| = |V1| + |V2| - 1, |E| = |E1| + |E2|.
inline Graph identify(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  std::size_t n = 0;
  std::vector<Edge> edges;
  detail::append_part(g1, 0, kUnreachable, n, edges);
  detail::append_part(g2, v2, v1, n, edges);
  return detail::build_composed(n, edges);
}

// Bridge edges y_i -- x_{i+1} between consecutive parts.
inline Composition compose_link(std::span<const AnchoredGraph> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyList, "link needs at least one part");
  detail::check_anchors(parts);
  Composition out;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.placement.push_back(detail::append_part(parts[i].graph, 0, kUnreachable, n, edges));
    if (i > 0) edges.push_back({out.placement[i - 1][parts[i - 1].y], out.placement[i][parts[i].x]});
  }
  out.graph = detail::build_composed(n, edges);
  return out;
}

// y_i is identified with x_{i+1}.
inline Composition compose_chain(std::span<const AnchoredGraph> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyList, "chain needs at least one part");
  detail::check_anchors(parts);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].x == parts[i].y && parts[i].graph.num_vertices() > 1) {
      throw Error(ErrorKind::DegenerateAnchors,
                  "part " + std::to_string(i) + " has x == y on a multi-vertex graph");
    }
  }
  Composition out;
  std::size_t n = 0;
  std::vector<Edge> edges;
  out.placement.push_back(detail::append_part(parts[0].graph, 0, kUnreachable, n, edges));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const Vertex exit = out.placement[i - 1][parts[i - 1].y];
    out.placement.push_back(detail::append_part(parts[i].graph, parts[i].x, exit, n, edges));
  }
  out.graph = detail::build_composed(n, edges);
  return out;
}

// Every x_i collapses onto x_1.
inline Composition compose_bouquet(std::span<const AnchoredGraph> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyList, "bouquet needs at least one part");
  detail::check_anchors(parts);
  Composition out;
  std::size_t n = 0;
  std::vector<Edge> edges;
  out.placement.push_back(detail::append_part(parts[0].graph, 0, kUnreachable, n, edges));
  const Vertex centre = out.placement[0][parts[0].x];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.placement.push_back(detail::append_part(parts[i].graph, parts[i].x, centre, n, edges));
  }
  out.graph = detail::build_composed(n, edges);
  return out;
}

// The anchors x_1..x_k become the cycle C_k, k >= 3.
inline Composition compose_circuit(std::span<const AnchoredGraph> parts) {
  if (parts.size() < 3) {
    throw Error(ErrorKind::TooFewParts,
                "circuit needs at least 3 parts, got " + std::to_string(parts.size()));
  }
  detail::check_anchors(parts);
  Composition out;
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const auto& p : parts) {
    out.placement.push_back(detail::append_part(p.graph, 0, kUnreachable, n, edges));
  }
  const std::size_t k = parts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    edges.push_back({out.placement[i][parts[i].x], out.placement[j][parts[j].x]});
  }
  out.graph = detail::build_composed(n, edges);
  return out;
}

inline Graph link(std::span<const AnchoredGraph> parts) { return compose_link(parts).graph; }
inline Graph chain(std::span<const AnchoredGraph> parts) { return compose_chain(parts).graph; }
inline Graph bouquet(std::span<const AnchoredGraph> parts) { return compose_bouquet(parts).graph; }
inline Graph circuit(std::span<const AnchoredGraph> parts) { return compose_circuit(parts).graph; }

}  // namespace abcgg
