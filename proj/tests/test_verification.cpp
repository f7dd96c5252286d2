#include <gtest/gtest.h>

#include <cmath>

#include "abcgg/verification.hpp"
#include "oracle.hpp"

using namespace abcgg;

namespace {

std::size_t count_status(const VerificationReport& r, Status s) {
  std::size_t n = 0;
  for (const auto& e : r.entries) n += e.status == s;
  return n;
}

}  // namespace

TEST(Verification, ChainTriangularGG) {
  std::vector<FamilySpec> grid;
  for (int n = 2; n <= 5; ++n) grid.push_back(FamilySpec::of_order(Family::ChainTriangular, n));
  const auto r = verify_family(Family::ChainTriangular, IndexKind::AbcGG, grid);
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_TRUE(r.census_entries.empty());
  for (const auto& e : r.entries) {
    EXPECT_EQ(e.status, Status::Match) << describe(e.spec);
    EXPECT_NEAR(*e.direct, oracle::abc_gg(generate(e.spec)), 1e-12);
  }
}

TEST(Verification, SpiroDefaultLikeGrid) {
  const auto grid = make_grid(Family::Spiro, {.q = IntRange{4, 8}, .h = IntRange{2, 2}});
  const auto r = verify_family(Family::Spiro, IndexKind::Abc, grid);
  EXPECT_EQ(count_status(r, Status::Match), r.entries.size());
  for (const auto& e : r.entries) {
    EXPECT_NEAR(*e.closed_form, e.spec.q * e.spec.k / std::sqrt(2.0), 1e-9);
  }
}

TEST(Verification, TriangulaneAbcMismatchCarriesCensus) {
  const auto r = verify_family(Family::Triangulane, IndexKind::Abc,
                               make_grid(Family::Triangulane, {.k = IntRange{1, 3}}));
  ASSERT_EQ(r.entries.size(), 3u);
  for (const auto& e : r.entries) {
    const int k = e.spec.k;
    EXPECT_EQ(e.status, Status::Mismatch);
    ASSERT_TRUE(e.degree_census.has_value());
    // The (4,4) class the construction actually has: 9 * 2^(k-1) - 6.
    EXPECT_EQ(e.degree_census->at({4, 4}), 9u * (1u << (k - 1)) - 6);
    EXPECT_NEAR(*e.closed_form - *e.direct, 9 * std::pow(2.0, k - 1) * std::sqrt(6.0) / 4, 1e-9);
  }
  ASSERT_EQ(r.census_entries.size(), 3u);
  for (const auto& c : r.census_entries) EXPECT_EQ(c.status, Status::Mismatch);
}

TEST(Verification, TriangulaneGGMatches) {
  const auto r = verify_family(Family::Triangulane, IndexKind::AbcGG, make_grid(Family::Triangulane));
  EXPECT_EQ(count_status(r, Status::Match), 4u);
}

TEST(Verification, MetaHexOddGGIsReportedNotHidden) {
  const auto r = verify_family(Family::MetaHex, IndexKind::AbcGG, make_grid(Family::MetaHex));
  for (const auto& e : r.entries) {
    const bool odd_after_one = e.spec.n % 2 == 1 && e.spec.n > 1;
    EXPECT_EQ(e.status, odd_after_one ? Status::Mismatch : Status::Match) << e.spec.n;
    if (odd_after_one) {
      EXPECT_TRUE(e.proximity_census.has_value());
      EXPECT_FALSE(e.detail.empty());
    }
  }
}

TEST(Verification, ChainAbcSkipsOrderOne) {
  const auto r = verify_family(Family::OrthoHex, IndexKind::Abc, make_grid(Family::OrthoHex));
  ASSERT_EQ(r.entries.size(), 8u);
  EXPECT_EQ(r.entries[0].status, Status::Skipped);
  EXPECT_FALSE(r.entries[0].detail.empty());
  EXPECT_EQ(count_status(r, Status::Match), 7u);
}

TEST(Verification, NoTheoremEntriesStillCarryDirectValue) {
  const auto r = verify_family(Family::Spiro, IndexKind::AbcGG,
                               {FamilySpec::spiro(6, 2, 2)});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].status, Status::NoTheorem);
  ASSERT_TRUE(r.entries[0].direct.has_value());
  EXPECT_FALSE(r.entries[0].closed_form.has_value());
}

TEST(Verification, CensusExamples) {
  const auto d = census_check(Family::DendrimerD3, make_grid(Family::DendrimerD3));
  ASSERT_EQ(d.census_entries.size(), 3u);
  for (const auto& c : d.census_entries) {
    EXPECT_EQ(c.status, Status::Match);
    const std::size_t p = std::size_t{1} << c.spec.n;
    EXPECT_EQ(c.observed.at({3, 3}), 9 * p - 6);
    EXPECT_EQ(c.observed.at({3, 2}), 18 * p - 12);
    EXPECT_EQ(c.observed.at({2, 2}), 18 * p - 6);
  }
  const auto q = census_check(Family::QMn, {FamilySpec::q_mn(5, 4)});
  EXPECT_EQ(q.census_entries.at(0).expected,
            (DegreeCensus{{{7, 7}, 10}, {{7, 3}, 15}, {{3, 3}, 15}}));
  EXPECT_EQ(q.census_entries.at(0).status, Status::Match);
  const auto s = census_check(Family::Spiro, {FamilySpec::spiro(6, 1, 3)});
  EXPECT_EQ(s.census_entries.at(0).expected, (DegreeCensus{{{4, 4}, 1}, {{4, 2}, 6}, {{2, 2}, 11}}));
  EXPECT_EQ(s.census_entries.at(0).status, Status::Match);
}

TEST(Verification, GridErrors) {
  EXPECT_THROW(verify_family(Family::Spiro, IndexKind::Abc, {FamilySpec::q_mn(2, 2)}), Error);
  EXPECT_THROW(make_grid(Family::Spiro, {.q = IntRange{3, 4}, .h = IntRange{1, 3}}), Error);
}

TEST(Verification, DeterministicReports) {
  const auto grid = make_grid(Family::Polyphenylene);
  const auto a = verify_family(Family::Polyphenylene, IndexKind::Abc, grid);
  const auto b = verify_family(Family::Polyphenylene, IndexKind::Abc, grid);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].spec, b.entries[i].spec);
    EXPECT_EQ(a.entries[i].direct, b.entries[i].direct);
    EXPECT_EQ(a.entries[i].status, Status::Match);
  }
}

TEST(Verification, CensusImpliedAbc) {
  const Graph g = generate(FamilySpec::triangulane(2));
  EXPECT_NEAR(abc_from_census(edge_degree_classes(g)), oracle::abc(g), 1e-12);
}
