#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abcgg/constructions.hpp"
#include "abcgg/error.hpp"
#include "abcgg/graph.hpp"
#include "abcgg/indices.hpp"

namespace abcgg {

inline constexpr double kBoundTolerance = 1e-9;

enum class Direction { Lower, Upper };

constexpr std::string_view to_string(Direction d) { return d == Direction::Lower ? "lower" : "upper"; }

// For a LOWER bound slack = actual - bound; for an UPPER bound slack =
// bound - actual. holds means slack >= -tolerance. strict is only claimed
// when the slack clears the tolerance, since rounding cannot certify "<".
struct BoundReport {
  std::string theorem;
  IndexKind index = IndexKind::Abc;
  Direction direction = Direction::Lower;
  double bound_value = 0.0;
  double actual_value = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool strict = false;
};

namespace detail {

inline BoundReport make_report(std::string theorem, IndexKind index, Direction direction,
                               double bound, double actual) {
  BoundReport r{.theorem = std::move(theorem),
                .index = index,
                .direction = direction,
                .bound_value = bound,
                .actual_value = actual};
  r.slack = direction == Direction::Lower ? actual - bound : bound - actual;
  r.holds = r.slack >= -kBoundTolerance;
  r.strict = r.slack > kBoundTolerance;
  return r;
}

inline void require_abc_or_gg(IndexKind kind, std::string_view what) {
  if (kind == IndexKind::Wiener) {
    throw Error(ErrorKind::InvalidParams, std::string(what) + " is stated for abc and abc_gg only");
  }
}

inline void reject_k1_parts(std::span<const AnchoredGraph> parts, std::string_view what) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].graph.num_vertices() == 1) {
      throw Error(ErrorKind::PartIsK1, std::string(what) + ": part " + std::to_string(i) + " is K_1");
    }
  }
}

// max_term of edge uv, with degrees or proximity counts taken in g.
inline double edge_allowance(const Graph& g, Vertex u, Vertex v, IndexKind kind) {
  if (kind == IndexKind::Abc) return max_term(g.degree(u), g.degree(v));
  const ProximityPair p = detail::proximity_unchecked(g, u, v);
  return max_term(p.n_u, p.n_v);
}

inline double part_sum(std::span<const AnchoredGraph> parts, IndexKind kind) {
  double s = 0.0;
  for (const auto& p : parts) s += compute(p.graph, kind);
  return s;
}

inline double size_radical(std::size_t total, std::size_t a, std::size_t b) {
  if (total < 2) {
    throw Error(ErrorKind::InvalidParams, "|V(G)| - 2 is negative for a graph on " +
                                              std::to_string(total) + " vertices");
  }
  return std::sqrt(static_cast<double>(total - 2) /
                   (static_cast<double>(a) * static_cast<double>(b)));
}

// sum_{i=1}^{k-1} sqrt((|V(G)| - 2) / ((|V_1|+..+|V_i|)(|V_{i+1}|+..+|V_k|))).
inline double split_radicals(std::size_t total, std::span<const AnchoredGraph> parts) {
  std::size_t suffix = 0;
  for (const auto& p : parts) suffix += p.graph.num_vertices();
  std::size_t prefix = 0;
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    prefix += parts[i].graph.num_vertices();
    suffix -= parts[i].graph.num_vertices();
    s += size_radical(total, prefix, suffix);
  }
  return s;
}

}  // namespace detail

// index(G - e) >= index(G) - max_term(e). e must not be pendant; for abc_gg
// both G and G - e must be connected.
inline BoundReport edge_deletion_bound(const Graph& g, Edge e, IndexKind kind) {
  detail::require_abc_or_gg(kind, "edge deletion");
  g.check_vertex(e.u);
  g.check_vertex(e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw Error(ErrorKind::EdgeNotPresent,
                "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  if (g.degree(e.u) < 2 || g.degree(e.v) < 2) {
    throw Error(ErrorKind::PendantEdge,
                "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  const Graph h = remove_edge(g, e);
  if (kind == IndexKind::AbcGG) {
    require_connected(g, "edge deletion for abc_gg needs a connected graph");
    if (!is_connected(h)) {
      throw Error(ErrorKind::NotConnectedAfterDeletion,
                  "removing (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") disconnects the graph");
    }
  }
  const double bound = compute(g, kind) - detail::edge_allowance(g, e.u, e.v, kind);
  return detail::make_report("edge_deletion", kind, Direction::Lower, bound, compute(h, kind));
}

// index(G - v) >= index(G) - sum over edges vw of max_term(vw). Every
// neighbour of v must have degree >= 2 so G - v has no isolated vertex.
inline BoundReport vertex_deletion_bound(const Graph& g, Vertex v, IndexKind kind) {
  detail::require_abc_or_gg(kind, "vertex deletion");
  g.check_vertex(v);
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) < 2) {
      throw Error(ErrorKind::PendantEdge, "neighbour " + std::to_string(w) + " of " +
                                              std::to_string(v) + " is pendant");
    }
  }
  const Graph h = remove_vertex(g, v);
  if (kind == IndexKind::AbcGG) {
    require_connected(g, "vertex deletion for abc_gg needs a connected graph");
    if (!is_connected(h)) {
      throw Error(ErrorKind::NotConnectedAfterDeletion,
                  "removing " + std::to_string(v) + " disconnects the graph");
    }
  }
  double allowance = 0.0;
  for (Vertex w : g.neighbors(v)) allowance += detail::edge_allowance(g, v, w, kind);
  return detail::make_report("vertex_deletion", kind, Direction::Lower,
                             compute(g, kind) - allowance, compute(h, kind));
}

// index(link) <= sum index(G_i) + sum over bridges of max_term, measured in
// the linked graph.
inline BoundReport link_bound(std::span<const AnchoredGraph> parts, IndexKind kind) {
  detail::require_abc_or_gg(kind, "the link bound");
  detail::reject_k1_parts(parts, "link");
  const Composition c = compose_link(parts);
  double bound = detail::part_sum(parts, kind);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    bound += detail::edge_allowance(c.graph, c.image(i, parts[i].y), c.image(i + 1, parts[i + 1].x),
                                    kind);
  }
  return detail::make_report("link", kind, Direction::Upper, bound, compute(c.graph, kind));
}

// ABC_GG(link) < |E| - (k-1) + sum ABC_GG(G_i) + split radicals.
inline BoundReport link_gg_counting_bound(std::span<const AnchoredGraph> parts) {
  const Graph g = link(parts);
  const double bound = static_cast<double>(g.num_edges() - (parts.size() - 1)) +
                       detail::part_sum(parts, IndexKind::AbcGG) +
                       detail::split_radicals(g.num_vertices(), parts);
  return detail::make_report("link_gg_counting", IndexKind::AbcGG, Direction::Upper, bound,
                             abc_gg(g));
}

// ABC_GG(chain) < |E| + sum ABC_GG(G_i) + split radicals.
inline BoundReport chain_gg_bound(std::span<const AnchoredGraph> parts) {
  const Graph g = chain(parts);
  const double bound = static_cast<double>(g.num_edges()) +
                       detail::part_sum(parts, IndexKind::AbcGG) +
                       detail::split_radicals(g.num_vertices(), parts);
  return detail::make_report("chain_gg", IndexKind::AbcGG, Direction::Upper, bound, abc_gg(g));
}

inline BoundReport bouquet_gg_bound(std::span<const AnchoredGraph> parts) {
  const Graph g = bouquet(parts);
  const double bound = static_cast<double>(g.num_edges()) +
                       detail::part_sum(parts, IndexKind::AbcGG) +
                       detail::split_radicals(g.num_vertices(), parts);
  return detail::make_report("bouquet_gg", IndexKind::AbcGG, Direction::Upper, bound, abc_gg(g));
}

// abc: max_term over the anchor cycle (degrees in G) + sum ABC(G_i); no K_1
// parts. abc_gg: |E| - k + sum ABC_GG(G_i) + sqrt((|V|-2)/(|V_i||V_{i+1}|))
// over consecutive anchors, cyclically; K_1 parts allowed.
inline BoundReport circuit_bounds(std::span<const AnchoredGraph> parts, IndexKind kind) {
  detail::require_abc_or_gg(kind, "the circuit bound");
  if (kind == IndexKind::Abc) detail::reject_k1_parts(parts, "circuit");
  const Composition c = compose_circuit(parts);
  const std::size_t k = parts.size();
  double bound = detail::part_sum(parts, kind);
  if (kind == IndexKind::Abc) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + 1) % k;
      bound += detail::edge_allowance(c.graph, c.image(i, parts[i].x), c.image(j, parts[j].x), kind);
    }
    return detail::make_report("circuit", kind, Direction::Upper, bound, abc(c.graph));
  }
  bound += static_cast<double>(c.graph.num_edges() - k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    bound += detail::size_radical(c.graph.num_vertices(), parts[i].graph.num_vertices(),
                                  parts[j].graph.num_vertices());
  }
  return detail::make_report("circuit", kind, Direction::Upper, bound, abc_gg(c.graph));
}

// The max-term form of the circuit bound for ABC_GG: proximity counts of the
// anchor-cycle edges in G.
inline BoundReport circuit_peeling_gg_bound(std::span<const AnchoredGraph> parts) {
  detail::reject_k1_parts(parts, "circuit");
  const Composition c = compose_circuit(parts);
  const std::size_t k = parts.size();
  double bound = detail::part_sum(parts, IndexKind::AbcGG);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    bound += detail::edge_allowance(c.graph, c.image(i, parts[i].x), c.image(j, parts[j].x),
                                    IndexKind::AbcGG);
  }
  return detail::make_report("circuit_peeling_gg", IndexKind::AbcGG, Direction::Upper, bound,
                             abc_gg(c.graph));
}

}  // namespace abcgg
