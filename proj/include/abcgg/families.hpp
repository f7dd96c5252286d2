#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abcgg/constructions.hpp"
#include "abcgg/error.hpp"
#include "abcgg/graph.hpp"
#include "abcgg/shapes.hpp"

namespace abcgg {

enum class Family {
  QMn,              // Q(m,n): K_m with a K_n hung on every vertex
  Spiro,            // S_{q,h,k}: chain of k cycles C_q, contacts h apart
  Polyphenylene,    // L_{q,h,k}: link of k cycles C_q, contacts h apart
  ChainTriangular,  // T_n
  ParaSquare,       // Q_n
  OrthoSquare,      // O_n
  OrthoHex,         // O^h_n
  ParaHex,          // L_n
  MetaHex,          // M_n
  Triangulane,      // T_k
  DendrimerD3,      // D_3[n]
};

inline constexpr std::array<Family, 11> kAllFamilies = {
    Family::QMn,        Family::Spiro,      Family::Polyphenylene, Family::ChainTriangular,
    Family::ParaSquare, Family::OrthoSquare, Family::OrthoHex,     Family::ParaHex,
    Family::MetaHex,    Family::Triangulane, Family::DendrimerD3};

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::QMn: return "q_mn";
    case Family::Spiro: return "spiro";
    case Family::Polyphenylene: return "polyphenylene";
    case Family::ChainTriangular: return "chain_triangular";
    case Family::ParaSquare: return "para_square";
    case Family::OrthoSquare: return "ortho_square";
    case Family::OrthoHex: return "ortho_hex";
    case Family::ParaHex: return "para_hex";
    case Family::MetaHex: return "meta_hex";
    case Family::Triangulane: return "triangulane";
    case Family::DendrimerD3: return "dendrimer_d3";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

// Chains of identical cycles with a fixed contact offset inside each cell.
struct CellShape {
  int q;  // cycle length
  int h;  // distance between the two contact vertices of one cell
};

constexpr std::optional<CellShape> chain_cell(Family f) {
  switch (f) {
    case Family::ChainTriangular: return CellShape{3, 1};
    case Family::ParaSquare: return CellShape{4, 2};
    case Family::OrthoSquare: return CellShape{4, 1};
    case Family::OrthoHex: return CellShape{6, 1};
    case Family::ParaHex: return CellShape{6, 3};
    case Family::MetaHex: return CellShape{6, 2};
    default: return std::nullopt;
  }
}

constexpr bool is_chain_cactus(Family f) { return chain_cell(f).has_value(); }

// Which of m, n, q, h, k a family reads.
struct ParamUse {
  bool m = false, n = false, q = false, h = false, k = false;
};

constexpr ParamUse params_used(Family f) {
  switch (f) {
    case Family::QMn: return {.m = true, .n = true};
    case Family::Spiro:
    case Family::Polyphenylene: return {.q = true, .h = true, .k = true};
    case Family::Triangulane: return {.k = true};
    default: return {.n = true};
  }
}

struct FamilySpec {
  Family family = Family::QMn;
  int m = 0;
  int n = 0;
  int q = 0;
  int h = 0;
  int k = 0;

  static FamilySpec q_mn(int m, int n) { return {.family = Family::QMn, .m = m, .n = n}; }
  static FamilySpec spiro(int q, int h, int k) {
    return {.family = Family::Spiro, .q = q, .h = h, .k = k};
  }
  static FamilySpec polyphenylene(int q, int h, int k) {
    return {.family = Family::Polyphenylene, .q = q, .h = h, .k = k};
  }
  // Any chain-cactus family, or DENDRIMER_D3, parameterized by n.
  static FamilySpec of_order(Family f, int n) { return {.family = f, .n = n}; }
  static FamilySpec triangulane(int k) { return {.family = Family::Triangulane, .k = k}; }
  static FamilySpec dendrimer(int n) { return {.family = Family::DendrimerD3, .n = n}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Named parameters the family reads, in m, n, q, h, k order.
inline std::vector<std::pair<std::string_view, int>> named_params(const FamilySpec& s) {
  const ParamUse use = params_used(s.family);
  std::vector<std::pair<std::string_view, int>> out;
  if (use.m) out.emplace_back("m", s.m);
  if (use.n) out.emplace_back("n", s.n);
  if (use.q) out.emplace_back("q", s.q);
  if (use.h) out.emplace_back("h", s.h);
  if (use.k) out.emplace_back("k", s.k);
  return out;
}

// "spiro(q=6,h=2,k=8)"
inline std::string describe(const FamilySpec& s) {
  std::string out(to_string(s.family));
  out += '(';
  bool first = true;
  for (const auto& [name, value] : named_params(s)) {
    if (!first) out += ',';
    first = false;
    out += std::string(name) + "=" + std::to_string(value);
  }
  out += ')';
  return out;
}

namespace detail {

// Generators are capped well above every grid the tools use so a typo on the
// command line cannot ask for 2^40 vertices.
inline constexpr double kMaxGeneratedVertices = 5.0e6;

inline void require(bool ok, const FamilySpec& s, const std::string& constraint) {
  if (!ok) throw Error(ErrorKind::InvalidParams, describe(s) + " violates " + constraint);
}

inline double approx_vertex_count(const FamilySpec& s) {
  switch (s.family) {
    case Family::QMn: return static_cast<double>(s.m) * s.n;
    case Family::Spiro:
    case Family::Polyphenylene: return static_cast<double>(s.q) * s.k;
    case Family::Triangulane: return 6.0 * std::ldexp(1.0, s.k);
    case Family::DendrimerD3: return 39.0 * std::ldexp(1.0, s.n);
    default: return 6.0 * s.n;
  }
}

}  // namespace detail

inline void validate(const FamilySpec& s) {
  using detail::require;
  switch (s.family) {
    case Family::QMn:
      require(s.m >= 2 && s.n >= 2, s, "m >= 2 and n >= 2");
      break;
    case Family::Spiro:
    case Family::Polyphenylene:
      require(s.q >= 3, s, "q >= 3");
      require(s.h >= 1 && s.h <= s.q / 2, s, "1 <= h <= floor(q/2)");
      require(s.k >= 1, s, "k >= 1");
      break;
    case Family::Triangulane:
      require(s.k >= 1, s, "k >= 1");
      require(s.k <= 40, s, "k <= 40");
      break;
    case Family::DendrimerD3:
      require(s.n >= 1, s, "n >= 1");
      require(s.n <= 40, s, "n <= 40");
      break;
    default:
      require(s.n >= 1, s, "n >= 1");
      break;
  }
  require(detail::approx_vertex_count(s) <= detail::kMaxGeneratedVertices, s,
          "the generator size cap of 5e6 vertices");
}

namespace detail {

inline AnchoredGraph cell(int q, int h) {
  return AnchoredGraph(shapes::cycle(static_cast<std::size_t>(q)), 0, static_cast<Vertex>(h));
}

inline Graph q_mn(int m, int n) {
  Graph g = shapes::complete(static_cast<std::size_t>(m));
  const Graph blade = shapes::complete(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < static_cast<Vertex>(m); ++u) g = identify(g, u, blade, 0);
  return g;
}

inline Graph cycle_chain(int q, int h, int k, bool bridged) {
  const std::vector<AnchoredGraph> parts(static_cast<std::size_t>(k), cell(q, h));
  return bridged ? link(parts) : chain(parts);
}

// Wing G_1 is a triangle rooted at a vertex; G_j is the circuit of
// [G_{j-1}, G_{j-1}, K_1] rooted at the K_1.
inline AnchoredGraph triangulane_wing(int level) {
  AnchoredGraph wing(shapes::cycle(3), 0);
  for (int j = 2; j <= level; ++j) {
    const std::vector<AnchoredGraph> parts{wing, wing, AnchoredGraph(shapes::k1(), 0)};
    Composition c = compose_circuit(parts);
    const Vertex root = c.image(2, 0);
    wing = AnchoredGraph(std::move(c.graph), root);
  }
  return wing;
}

// Hexagon 0..5 with a pendant leaf 6 on vertex 0, rooted at the leaf.
inline AnchoredGraph dendrimer_seed() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}};
  return AnchoredGraph(build_graph(7, edges), 6);
}

// Hexagon 0..5 with leaves 6 (on 0) and 7 (on the opposite vertex 3). Entry
// root is 6; the far leaf 7 becomes the root of the next generation.
inline AnchoredGraph dendrimer_spacer() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {3, 7}};
  return AnchoredGraph(build_graph(8, edges), 6, 7);
}

inline AnchoredGraph dendrimer_wing(int generations) {
  AnchoredGraph wing = dendrimer_seed();
  const AnchoredGraph spacer = dendrimer_spacer();
  for (int j = 1; j <= generations; ++j) {
    const std::vector<AnchoredGraph> parts{wing, wing, spacer};
    Composition c = compose_bouquet(parts);
    const Vertex root = c.image(2, spacer.y);
    wing = AnchoredGraph(std::move(c.graph), root);
  }
  return wing;
}

}  // namespace detail

// Builds the family member. Every generator is a composition of cycles and
// complete graphs via identify / chain / link / circuit / bouquet.
inline Graph generate(const FamilySpec& s) {
  validate(s);
  switch (s.family) {
    case Family::QMn: return detail::q_mn(s.m, s.n);
    case Family::Spiro: return detail::cycle_chain(s.q, s.h, s.k, false);
    case Family::Polyphenylene: return detail::cycle_chain(s.q, s.h, s.k, true);
    case Family::Triangulane: {
      const AnchoredGraph wing = detail::triangulane_wing(s.k);
      return circuit(std::vector<AnchoredGraph>(3, wing));
    }
    case Family::DendrimerD3: {
      const AnchoredGraph wing = detail::dendrimer_wing(s.n);
      return bouquet(std::vector<AnchoredGraph>(3, wing));
    }
    default: {
      const CellShape c = *chain_cell(s.family);
      return detail::cycle_chain(c.q, c.h, s.n, false);
    }
  }
}

// Unordered degree pair, stored larger-first: (4,2) not (2,4).
struct DegreePair {
  std::size_t hi = 0;
  std::size_t lo = 0;

  static DegreePair of(std::size_t a, std::size_t b) {
    return a >= b ? DegreePair{a, b} : DegreePair{b, a};
  }
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

using DegreeCensus = std::map<DegreePair, std::size_t>;

inline DegreeCensus edge_degree_classes(const Graph& g) {
  DegreeCensus census;
  for (const Edge& e : g.edges()) ++census[DegreePair::of(g.degree(e.u), g.degree(e.v))];
  return census;
}

// "(4,2):28 (2,2):20", classes in descending order.
inline std::string format_census(const DegreeCensus& census) {
  std::string out;
  for (auto it = census.rbegin(); it != census.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(it->first.hi) + "," + std::to_string(it->first.lo) +
           "):" + std::to_string(it->second);
  }
  return out;
}

}  // namespace abcgg
