#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fixture.hpp"
#include "pdce/decider.hpp"
#include "pdce/error.hpp"
#include "pdce/oracle.hpp"
#include "support.hpp"

using namespace pdce;
using pdce::testing::points;

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_planar_embeddings(points({{1, 1}})).size(), 1u);
  EXPECT_EQ(enumerate_planar_embeddings(points({{0, 0}, {1, 1}})).size(), 2u);
  EXPECT_EQ(enumerate_planar_embeddings(points({{0, 0}, {2, 3}, {4, 1}})).size(), 6u);
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto s = generate_random_convex(n, n, GenerationMode::General);
    EXPECT_EQ(enumerate_planar_embeddings(s).size(), n << (n - 2));
  }
}

// The arc-extension enumeration equals the n! filter with a segment test.
TEST(Enumerate, MatchesPermutationFilter) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto s = generate_random_convex(n, 40 + n, GenerationMode::General);
    std::set<Embedding> arcs;
    for (const auto& e : enumerate_planar_embeddings(s)) EXPECT_TRUE(arcs.insert(e).second);
    std::set<Embedding> filtered;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      const Embedding e(order);
      if (pdce::testing::simple_polyline(pdce::testing::placed(s, e))) filtered.insert(e);
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_EQ(arcs, filtered) << "n=" << n;
  }
}

TEST(BruteForce, Examples) {
  // Canonical (2,3), (0,0), (4,1): both (0,0)->(2,3)->(4,1) and its mirror
  // image (4,1)->(2,3)->(0,0) follow U then D.
  const auto s = points({{0, 0}, {2, 3}, {4, 1}});
  EXPECT_EQ(brute_force_pdce(DirPath::parse("UD"), s), (std::vector<Embedding>{Embedding({1, 0, 2}), Embedding({2, 0, 1})}));
  EXPECT_EQ(brute_force_pdce(DirPath::parse(""), points({{5, 5}})).size(), 1u);
  const auto big = generate_random_convex(21, 1, GenerationMode::General);
  try {
    brute_force_pdce(DirPath::parse(std::string(20, 'U')), big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
  EXPECT_THROW(brute_force_pdce(DirPath::parse("U"), s), Error);
}

TEST(BruteForce, PruningMatchesFilter) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 9;
    const auto s = generate_random_convex(n, rng(), GenerationMode::General);
    const std::string p = pdce::testing::random_path(rng, n - 1, "UDLR");
    std::vector<Embedding> filtered;
    for (const auto& e : enumerate_planar_embeddings(s))
      if (pdce::testing::directed_ok(p, pdce::testing::placed(s, e))) filtered.push_back(e);
    EXPECT_EQ(brute_force_pdce(DirPath::parse(p), s), filtered);
  }
}

TEST(Count, PlaneSpanningPaths) {
  EXPECT_EQ(count_plane_spanning_paths(points({{0, 0}, {2, 3}, {4, 1}})), 3u);
  EXPECT_EQ(count_plane_spanning_paths(generate_random_convex(4, 2, GenerationMode::General)), 8u);
  EXPECT_EQ(count_plane_spanning_paths(generate_random_convex(10, 2, GenerationMode::General)), 1280u);
  EXPECT_EQ(count_plane_spanning_paths(points({{1, 1}})), 1u);
}

TEST(Search, FindsCertifiedLeftSidedSet) {
  const SearchResult r = search_counterexample(SearchOptions{});
  EXPECT_TRUE(classify(r.set).contains(SetTag::LeftSided));
  EXPECT_EQ(r.set.size(), 7u);
  const DirPath p = DirPath::parse("LULRDR");
  EXPECT_TRUE(brute_force_pdce(p, r.set).empty());
  EXPECT_FALSE(decide_pdce(p, r.set).has_value());
  const auto census = pdce::testing::census("LULRDR", r.set);
  EXPECT_EQ(census.planar, 224u);
  EXPECT_EQ(census.pdce, 0u);
  for (const Point& q : r.set.points()) {
    EXPECT_TRUE(0 <= q.x && q.x <= kSearchGrid);
    EXPECT_TRUE(0 <= q.y && q.y <= kSearchGrid);
  }
  // Deterministic for a fixed seed.
  EXPECT_EQ(search_counterexample(SearchOptions{}).set, r.set);
}

TEST(Search, FutileFamiliesExhaustBudget) {
  SearchOptions three;
  three.path = DirPath::parse("UUUUUU");
  three.budget = 2000;
  EXPECT_THROW(search_counterexample(three), Error);
  for (auto family : {GenerationMode::QuarterIncreasing, GenerationMode::QuarterDecreasing}) {
    SearchOptions quarter;
    quarter.family = family;
    quarter.budget = 300;
    try {
      search_counterexample(quarter);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotFoundWithinBudget);
    }
  }
  SearchOptions none;
  none.budget = 0;
  EXPECT_THROW(search_counterexample(none), Error);
}

TEST(Certificate, FixtureMatches) {
  const auto fx = pdce::testing::load_fixture();
  EXPECT_EQ(fx.path.to_string(), "LULRDR");
  EXPECT_TRUE(classify(fx.set).contains(SetTag::LeftSided));
  EXPECT_EQ(fx.planar_candidates, 224u);
  EXPECT_EQ(fx.pdce_count, 0u);
  EXPECT_EQ(certificate_sha256(fx.path, fx.set), fx.certificate_sha256);
  const std::string text = certificate_text(fx.path, fx.set);
  EXPECT_NE(text.find("candidates 224\npdce 0\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 7 + 224 + 2);
  EXPECT_EQ(certificate_sha256(fx.path, fx.set).size(), 64u);
}
