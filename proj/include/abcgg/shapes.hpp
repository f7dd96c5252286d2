#pragma once

#include <cstddef>
#include <vector>

#include "abcgg/graph.hpp"

namespace abcgg::shapes {

// Single vertex, no edges.
inline Graph k1() { return build_graph(1, std::vector<Edge>{}); }

// P_n: 0 - 1 - ... - (n-1).
inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(n, edges);
}

// C_n, n >= 3, vertices in cyclic order.
inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return build_graph(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

// K_{1,leaves} with centre 0.
inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return build_graph(leaves + 1, edges);
}

}  // namespace abcgg::shapes
