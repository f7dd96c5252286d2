#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "abcgg/constructions.hpp"
#include "abcgg/graph.hpp"

namespace abcgg {

using Rng = std::mt19937_64;

// Uniform random labelled spanning tree shape (each vertex hangs off an
// earlier one), relabelled by a random permutation, plus every remaining pair
// with a density drawn from [0, 0.6].
inline Graph random_connected_graph(Rng& rng, std::size_t n) {
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> parent(0, i - 1);
    edges.push_back(Edge{label[i], label[parent(rng)]}.normalized());
  }
  std::vector<Edge> tree = edges;
  std::sort(tree.begin(), tree.end());

  std::uniform_real_distribution<double> density_dist(0.0, 0.6);
  std::bernoulli_distribution extra(density_dist(rng));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!std::binary_search(tree.begin(), tree.end(), Edge{u, v}) && extra(rng)) {
        edges.push_back({u, v});
      }
    }
  }
  return build_graph(n, edges);
}

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Vertex uniform_vertex(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng);
}

// A random connected part with random anchors; with distinct_anchors the exit
// differs from the entry (needs at least two vertices).
inline AnchoredGraph random_part(Rng& rng, std::size_t min_vertices, std::size_t max_vertices,
                                 bool distinct_anchors = false) {
  Graph g = random_connected_graph(rng, uniform_size(rng, min_vertices, max_vertices));
  const std::size_t n = g.num_vertices();
  const Vertex x = uniform_vertex(rng, n);
  Vertex y = uniform_vertex(rng, n);
  if (distinct_anchors && n > 1) {
    while (y == x) y = uniform_vertex(rng, n);
  }
  return AnchoredGraph(std::move(g), x, y);
}

}  // namespace abcgg
