#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "abcgg/bounds.hpp"
#include "abcgg/random.hpp"

// Randomized property runs for every inequality in bounds.hpp. Each case owns
// an independent stream seeded from (seed, case id), so adding a case does
// not shift the instances another case sees.

namespace abcgg {

enum class BoundTheorem {
  EdgeDeletion,
  VertexDeletion,
  Link,
  LinkGGCounting,
  ChainGG,
  BouquetGG,
  Circuit,
  CircuitPeelingGG,
};

constexpr std::string_view to_string(BoundTheorem t) {
  switch (t) {
    case BoundTheorem::EdgeDeletion: return "edge_deletion";
    case BoundTheorem::VertexDeletion: return "vertex_deletion";
    case BoundTheorem::Link: return "link";
    case BoundTheorem::LinkGGCounting: return "link_gg_counting";
    case BoundTheorem::ChainGG: return "chain_gg";
    case BoundTheorem::BouquetGG: return "bouquet_gg";
    case BoundTheorem::Circuit: return "circuit";
    case BoundTheorem::CircuitPeelingGG: return "circuit_peeling_gg";
  }
  return "unknown";
}

inline constexpr std::array<BoundTheorem, 8> kAllBoundTheorems = {
    BoundTheorem::EdgeDeletion,   BoundTheorem::VertexDeletion, BoundTheorem::Link,
    BoundTheorem::LinkGGCounting, BoundTheorem::ChainGG,        BoundTheorem::BouquetGG,
    BoundTheorem::Circuit,        BoundTheorem::CircuitPeelingGG};

inline std::optional<BoundTheorem> parse_bound_theorem(std::string_view name) {
  for (BoundTheorem t : kAllBoundTheorems) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

// Whether the theorem takes an index argument or is fixed to abc_gg.
constexpr bool takes_index(BoundTheorem t) {
  return t == BoundTheorem::EdgeDeletion || t == BoundTheorem::VertexDeletion ||
         t == BoundTheorem::Link || t == BoundTheorem::Circuit;
}

struct BoundCase {
  BoundTheorem theorem = BoundTheorem::EdgeDeletion;
  IndexKind index = IndexKind::Abc;

  std::string name() const {
    return std::string(to_string(theorem)) + "/" + std::string(to_string(index));
  }
  friend bool operator==(const BoundCase&, const BoundCase&) = default;
};

inline std::vector<BoundCase> all_bound_cases() {
  std::vector<BoundCase> out;
  for (BoundTheorem t : kAllBoundTheorems) {
    if (takes_index(t)) {
      out.push_back({t, IndexKind::Abc});
      out.push_back({t, IndexKind::AbcGG});
    } else {
      out.push_back({t, IndexKind::AbcGG});
    }
  }
  return out;
}

// One input to a bound: a graph plus an edge or vertex for the deletion
// bounds, or a list of anchored parts for the composition bounds.
struct BoundInstance {
  Graph graph;
  Edge edge;
  Vertex vertex = 0;
  std::vector<AnchoredGraph> parts;
};

inline BoundReport evaluate(const BoundCase& c, const BoundInstance& in) {
  switch (c.theorem) {
    case BoundTheorem::EdgeDeletion: return edge_deletion_bound(in.graph, in.edge, c.index);
    case BoundTheorem::VertexDeletion: return vertex_deletion_bound(in.graph, in.vertex, c.index);
    case BoundTheorem::Link: return link_bound(in.parts, c.index);
    case BoundTheorem::LinkGGCounting: return link_gg_counting_bound(in.parts);
    case BoundTheorem::ChainGG: return chain_gg_bound(in.parts);
    case BoundTheorem::BouquetGG: return bouquet_gg_bound(in.parts);
    case BoundTheorem::Circuit: return circuit_bounds(in.parts, c.index);
    case BoundTheorem::CircuitPeelingGG: return circuit_peeling_gg_bound(in.parts);
  }
  throw Error(ErrorKind::InvalidParams, "unknown bound theorem");
}

// Deletion inputs: connected graphs on 4..12 vertices with a uniform edge or
// vertex. Composition inputs: 2..5 connected parts (3..5 for circuits) on
// 2..6 vertices each with uniform anchors.
inline BoundInstance draw_instance(BoundTheorem t, Rng& rng) {
  BoundInstance in;
  switch (t) {
    case BoundTheorem::EdgeDeletion: {
      in.graph = random_connected_graph(rng, uniform_size(rng, 4, 12));
      const auto edges = in.graph.edges();
      in.edge = edges[uniform_size(rng, 0, edges.size() - 1)];
      return in;
    }
    case BoundTheorem::VertexDeletion:
      in.graph = random_connected_graph(rng, uniform_size(rng, 4, 12));
      in.vertex = uniform_vertex(rng, in.graph.num_vertices());
      return in;
    default: break;
  }
  const bool cyclic = t == BoundTheorem::Circuit || t == BoundTheorem::CircuitPeelingGG;
  const std::size_t k = uniform_size(rng, cyclic ? 3 : 2, 5);
  for (std::size_t i = 0; i < k; ++i) {
    in.parts.push_back(random_part(rng, 2, 6, t == BoundTheorem::ChainGG));
  }
  return in;
}

namespace detail {

inline std::string describe_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.num_vertices()) + " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ' ';
    first = false;
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out + "]";
}

}  // namespace detail

inline std::string describe_instance(BoundTheorem t, const BoundInstance& in) {
  if (t == BoundTheorem::EdgeDeletion) {
    return detail::describe_graph(in.graph) + " edge " + std::to_string(in.edge.u) + "-" +
           std::to_string(in.edge.v);
  }
  if (t == BoundTheorem::VertexDeletion) {
    return detail::describe_graph(in.graph) + " vertex " + std::to_string(in.vertex);
  }
  std::string out;
  for (const auto& p : in.parts) {
    if (!out.empty()) out += " | ";
    out += detail::describe_graph(p.graph) + " x=" + std::to_string(p.x) +
           " y=" + std::to_string(p.y);
  }
  return out;
}

// Precondition failures are the inputs a theorem does not speak about.
inline bool is_precondition_failure(const Error& e) {
  return e.kind() == ErrorKind::PendantEdge || e.kind() == ErrorKind::NotConnectedAfterDeletion;
}

struct SuiteSummary {
  BoundCase bound;
  std::uint64_t seed = 0;
  std::size_t applicable = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::optional<BoundReport> worst;  // the report with the smallest slack
  std::string worst_instance;
};

using SuiteObserver = std::function<void(const BoundReport&, const BoundInstance&)>;

// Draws until `instances` inputs satisfy the preconditions (or a draw budget
// of 100x that runs out).
inline SuiteSummary run_bound_suite(const BoundCase& c, std::uint64_t seed,
                                    std::size_t instances = 1000,
                                    const SuiteObserver& observe = {}) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(c.theorem), static_cast<std::uint32_t>(c.index)};
  Rng rng(seq);
  SuiteSummary s{.bound = c, .seed = seed};
  const std::size_t budget = instances * 100;
  for (std::size_t draws = 0; s.applicable < instances && draws < budget; ++draws) {
    const BoundInstance in = draw_instance(c.theorem, rng);
    BoundReport r;
    try {
      r = evaluate(c, in);
    } catch (const Error& e) {
      if (!is_precondition_failure(e)) throw;
      ++s.skipped;
      continue;
    }
    ++s.applicable;
    if (!r.holds) ++s.violations;
    if (r.slack < s.min_slack) {
      s.min_slack = r.slack;
      s.worst = r;
      s.worst_instance = describe_instance(c.theorem, in);
    }
    if (observe) observe(r, in);
  }
  return s;
}

}  // namespace abcgg
