#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abcgg/error.hpp"
#include "abcgg/families.hpp"
#include "abcgg/formulas.hpp"
#include "abcgg/indices.hpp"

namespace abcgg {

inline constexpr double kVerifyTolerance = 1e-9;

enum class Status { Match, Mismatch, NoTheorem, Skipped };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Match: return "MATCH";
    case Status::Mismatch: return "MISMATCH";
    case Status::NoTheorem: return "NO_THEOREM";
    case Status::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

struct VerificationEntry {
  FamilySpec spec;
  IndexKind index = IndexKind::Abc;
  Status status = Status::Skipped;
  std::optional<double> closed_form;
  std::optional<double> direct;
  std::optional<double> abs_diff;
  std::optional<Branch> branch;
  std::string formula;
  std::string detail;  // skip reason, or census context for a mismatch
  // Attached to every MISMATCH: edge classes by endpoint degrees, and for
  // abc_gg also by (n_u, n_v).
  std::optional<DegreeCensus> degree_census;
  std::optional<DegreeCensus> proximity_census;
};

struct CensusEntry {
  FamilySpec spec;
  DegreeCensus expected;
  DegreeCensus observed;
  Status status = Status::Match;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  std::vector<CensusEntry> census_entries;

  std::size_t count(Status s) const {
    std::size_t c = 0;
    for (const auto& e : entries) c += e.status == s;
    for (const auto& e : census_entries) c += e.status == s;
    return c;
  }
};

// Edge classes by unordered proximity pair (larger count first).
inline DegreeCensus proximity_classes(const Graph& g) {
  DegreeCensus census;
  const auto pairs = proximity_pairs(g);
  for (const auto& p : pairs) ++census[DegreePair::of(p.n_u, p.n_v)];
  return census;
}

namespace detail {

inline void add_class(DegreeCensus& c, std::size_t a, std::size_t b, std::int64_t count) {
  if (count < 0) throw Error(ErrorKind::OutsideTheoremDomain, "negative edge count in census");
  if (count > 0) c[DegreePair::of(a, b)] += static_cast<std::size_t>(count);
}

}  // namespace detail

// The edge-class counts the degree-counting proofs assert, or nullopt for
// families whose closed forms were not derived by such a count.
inline std::optional<DegreeCensus> expected_census(const FamilySpec& s) {
  using detail::add_class;
  validate(s);
  DegreeCensus c;
  const std::int64_t m = s.m, n = s.n, q = s.q, k = s.k;
  switch (s.family) {
    case Family::QMn: {
      const std::size_t hub = static_cast<std::size_t>(m + n - 2);
      const std::size_t leaf = static_cast<std::size_t>(n - 1);
      add_class(c, hub, hub, m * (m - 1) / 2);
      add_class(c, hub, leaf, m * (n - 1));
      add_class(c, leaf, leaf, m * (n - 1) * (n - 2) / 2);
      return c;
    }
    case Family::Spiro:
      if (s.h >= 2 || k == 1) {
        add_class(c, 4, 2, 4 * (k - 1));
        add_class(c, 2, 2, q * k - 4 * (k - 1));
      } else {
        add_class(c, 4, 4, k - 2);
        add_class(c, 4, 2, 2 * k);
        add_class(c, 2, 2, q * k - 3 * k + 2);
      }
      return c;
    case Family::Polyphenylene:
      if (s.h >= 2 || k == 1) {
        add_class(c, 3, 3, k - 1);
        add_class(c, 3, 2, 4 * (k - 1));
        add_class(c, 2, 2, q * k - 4 * (k - 1));
      } else {
        add_class(c, 3, 3, 2 * k - 3);
        add_class(c, 3, 2, 2 * k);
        add_class(c, 2, 2, q * k - 3 * k + 2);
      }
      return c;
    case Family::Triangulane: {
      const std::int64_t p = std::int64_t{1} << k;
      add_class(c, 4, 4, 9 * p - 6);
      add_class(c, 4, 2, 3 * p);
      add_class(c, 2, 2, 3 * p / 2);
      return c;
    }
    case Family::DendrimerD3: {
      const std::int64_t sum = (std::int64_t{1} << n) - 1;  // sum_{j<n} 2^j
      add_class(c, 3, 3, 3 + 9 * sum);
      add_class(c, 3, 2, 6 + 18 * sum);
      add_class(c, 2, 2, 12 + 18 * sum);
      return c;
    }
    default: return std::nullopt;
  }
}

inline bool has_census(Family f) {
  return f == Family::QMn || f == Family::Spiro || f == Family::Polyphenylene ||
         f == Family::Triangulane || f == Family::DendrimerD3;
}

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Unset ranges fall back to the default grid of the family. For spiro and
// polyphenylene an unset h range means every valid h for each q.
struct GridRanges {
  std::optional<IntRange> m, n, q, h, k;
};

inline std::vector<FamilySpec> make_grid(Family f, const GridRanges& r = {}) {
  const auto pick = [](const std::optional<IntRange>& given, IntRange fallback) {
    return given.value_or(fallback);
  };
  std::vector<FamilySpec> out;
  switch (f) {
    case Family::QMn: {
      const IntRange rm = pick(r.m, {2, 6}), rn = pick(r.n, {2, 6});
      for (int m = rm.lo; m <= rm.hi; ++m) {
        for (int n = rn.lo; n <= rn.hi; ++n) out.push_back(FamilySpec::q_mn(m, n));
      }
      break;
    }
    case Family::Spiro:
    case Family::Polyphenylene: {
      const IntRange rq = pick(r.q, {3, 8}), rk = pick(r.k, {1, 6});
      for (int q = rq.lo; q <= rq.hi; ++q) {
        const IntRange rh = pick(r.h, {1, q / 2});
        for (int h = rh.lo; h <= rh.hi; ++h) {
          for (int k = rk.lo; k <= rk.hi; ++k) {
            out.push_back(f == Family::Spiro ? FamilySpec::spiro(q, h, k)
                                             : FamilySpec::polyphenylene(q, h, k));
          }
        }
      }
      break;
    }
    case Family::Triangulane: {
      const IntRange rk = pick(r.k, {1, 4});
      for (int k = rk.lo; k <= rk.hi; ++k) out.push_back(FamilySpec::triangulane(k));
      break;
    }
    case Family::DendrimerD3: {
      const IntRange rn = pick(r.n, {1, 3});
      for (int n = rn.lo; n <= rn.hi; ++n) out.push_back(FamilySpec::dendrimer(n));
      break;
    }
    default: {
      const IntRange rn = pick(r.n, {1, 8});
      for (int n = rn.lo; n <= rn.hi; ++n) out.push_back(FamilySpec::of_order(f, n));
      break;
    }
  }
  for (const auto& s : out) validate(s);
  return out;
}

namespace detail {

// A generator that returns a disconnected or empty graph is a bug in this
// library, not a finding, so it stops the run.
inline Graph generate_checked(const FamilySpec& s) {
  Graph g = generate(s);
  if (g.num_edges() == 0 || !is_connected(g)) {
    throw Error(ErrorKind::NotConnected, "generator produced a disconnected graph for " + describe(s));
  }
  return g;
}

inline VerificationEntry verify_point(const FamilySpec& s, const Graph& g, IndexKind index) {
  VerificationEntry e{.spec = s, .index = index};
  e.direct = compute(g, index);
  ClosedForm cf;
  try {
    cf = closed_form(s, index);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::NoTheorem) {
      e.status = Status::NoTheorem;
      e.detail = "no closed form for this family and index";
      return e;
    }
    if (err.kind() == ErrorKind::OutsideTheoremDomain) {
      e.status = Status::Skipped;
      e.detail = "closed form stated for n >= 2";
      return e;
    }
    throw;
  }
  e.closed_form = cf.value;
  e.branch = cf.branch;
  e.formula = cf.formula;
  e.abs_diff = std::fabs(cf.value - *e.direct);
  e.status = *e.abs_diff <= kVerifyTolerance ? Status::Match : Status::Mismatch;
  if (e.status == Status::Mismatch) {
    e.degree_census = edge_degree_classes(g);
    e.detail = "degree classes " + format_census(*e.degree_census);
    if (index == IndexKind::AbcGG) {
      e.proximity_census = proximity_classes(g);
      e.detail += "; proximity classes " + format_census(*e.proximity_census);
    }
  }
  return e;
}

inline std::optional<CensusEntry> census_point(const FamilySpec& s, const Graph& g) {
  auto expected = expected_census(s);
  if (!expected) return std::nullopt;
  CensusEntry c{.spec = s, .expected = std::move(*expected), .observed = edge_degree_classes(g)};
  c.status = c.expected == c.observed ? Status::Match : Status::Mismatch;
  return c;
}

inline void require_family(Family f, const std::vector<FamilySpec>& grid) {
  for (const auto& s : grid) {
    if (s.family != f) {
      throw Error(ErrorKind::InvalidParams,
                  describe(s) + " in a grid for " + std::string(to_string(f)));
    }
    validate(s);
  }
}

}  // namespace detail

// Entries follow grid order. Census rows are appended for families whose
// closed forms come from a degree count.
inline VerificationReport verify_family(Family f, IndexKind index,
                                        const std::vector<FamilySpec>& grid) {
  detail::require_family(f, grid);
  VerificationReport report;
  for (const auto& s : grid) {
    const Graph g = detail::generate_checked(s);
    report.entries.push_back(detail::verify_point(s, g, index));
    if (auto c = detail::census_point(s, g)) report.census_entries.push_back(std::move(*c));
  }
  return report;
}

inline VerificationReport census_check(Family f, const std::vector<FamilySpec>& grid) {
  detail::require_family(f, grid);
  VerificationReport report;
  for (const auto& s : grid) {
    if (auto c = detail::census_point(s, detail::generate_checked(s))) {
      report.census_entries.push_back(std::move(*c));
    }
  }
  return report;
}

// The census-implied ABC: sum over degree classes of count * radical.
inline double abc_from_census(const DegreeCensus& census) {
  double s = 0.0;
  for (const auto& [pair, count] : census) s += static_cast<double>(count) * radical_term(pair.hi, pair.lo);
  return s;
}

}  // namespace abcgg
