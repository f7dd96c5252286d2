#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "abcgg/error.hpp"
#include "abcgg/graph.hpp"

namespace abcgg {

enum class IndexKind { Abc, AbcGG, Wiener };

constexpr std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Abc: return "abc";
    case IndexKind::AbcGG: return "abc_gg";
    case IndexKind::Wiener: return "wiener";
  }
  return "unknown";
}

inline std::optional<IndexKind> parse_index_kind(std::string_view name) {
  if (name == "abc") return IndexKind::Abc;
  if (name == "abc_gg") return IndexKind::AbcGG;
  if (name == "wiener") return IndexKind::Wiener;
  return std::nullopt;
}

// sqrt((a+b-2)/(ab)), the shared summand shape of ABC and ABC_GG. A zero
// numerator short-circuits to exactly 0 so (1,1) terms never divide.
inline double radical_term(std::size_t a, std::size_t b) {
  const std::size_t numerator = a + b - 2;
  if (numerator == 0) return 0.0;
  return std::sqrt(static_cast<double>(numerator) /
                   (static_cast<double>(a) * static_cast<double>(b)));
}

// max{sqrt(2a-2)/b, sqrt(2b-2)/a}: the per-edge allowance in the deletion and
// peeling inequalities. Requires a, b >= 1.
inline double max_term(std::size_t a, std::size_t b) {
  const double da = static_cast<double>(a);
  const double db = static_cast<double>(b);
  return std::max(std::sqrt(2.0 * da - 2.0) / db, std::sqrt(2.0 * db - 2.0) / da);
}

// Connectivity is not required; isolated vertices are.
inline double abc(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v));
  }
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += radical_term(g.degree(e.u), g.degree(e.v));
  return sum;
}

inline double abc_gg(const Graph& g) {
  require_connected(g, "ABC_GG is defined on connected graphs");
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    const ProximityPair p = detail::proximity_unchecked(g, e.u, e.v);
    sum += radical_term(p.n_u, p.n_v);
  }
  return sum;
}

inline std::uint64_t wiener(const Graph& g) {
  require_connected(g, "the Wiener index is defined on connected graphs");
  std::uint64_t twice = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (std::uint32_t d : bfs_distances(g, s)) twice += d;
  }
  return twice / 2;
}

inline double compute(const Graph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::Abc: return abc(g);
    case IndexKind::AbcGG: return abc_gg(g);
    case IndexKind::Wiener: return static_cast<double>(wiener(g));
  }
  throw Error(ErrorKind::InvalidParams, "unknown index kind");
}

}  // namespace abcgg
