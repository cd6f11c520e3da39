#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pdce/error.hpp"
#include "pdce/validator.hpp"
#include "support.hpp"

using namespace pdce;
using pdce::testing::points;

namespace {

ConvexPointSet s5() { return points({{3, 6}, {1, 5}, {0, 3}, {2, 1}, {4, 0}}); }

// (0,3),(1,5),(2,1),(4,0),(3,6) in canonical indices.
const Embedding kTrace({2, 1, 3, 4, 0});

}  // namespace

TEST(Direction, Examples) {
  const ConvexPointSet s = s5();
  EXPECT_TRUE(check_direction_consistency(DirPath::parse("URDU"), s, kTrace).consistent);

  const ConvexPointSet two = points({{0, 0}, {1, 1}});  // canonical: (1,1), (0,0)
  const auto bad = check_direction_consistency(DirPath::parse("U"), two, Embedding({0, 1}));
  EXPECT_FALSE(bad.consistent);
  EXPECT_EQ(bad.first_bad_edge, 1u);
  EXPECT_TRUE(check_direction_consistency(DirPath::parse(""), points({{4, 4}}), Embedding({0})).consistent);

  const auto later = check_direction_consistency(DirPath::parse("URDD"), s, kTrace);
  EXPECT_EQ(later.first_bad_edge, 4u);
}

TEST(Direction, Strictness) {
  EXPECT_TRUE(direction_ok(DirLabel::U, {0, 0}, {5, 1}));
  EXPECT_FALSE(direction_ok(DirLabel::U, {0, 0}, {5, 0}));
  EXPECT_FALSE(direction_ok(DirLabel::R, {0, 0}, {0, 5}));
  EXPECT_TRUE(direction_ok(DirLabel::L, {0, 0}, {-1, 5}));
  EXPECT_TRUE(direction_ok(DirLabel::D, {0, 0}, {9, -1}));
}

TEST(Planarity, Examples) {
  const ConvexPointSet s = s5();
  EXPECT_TRUE(check_planarity_prefix(s, kTrace).planar);
  EXPECT_TRUE(check_planarity_segments(s, kTrace).planar);

  const ConvexPointSet three = points({{0, 0}, {2, 3}, {4, 1}});
  std::vector<std::size_t> order{0, 1, 2};
  do {
    EXPECT_TRUE(check_planarity_prefix(three, Embedding(order)).planar);
    EXPECT_TRUE(check_planarity_segments(three, Embedding(order)).planar);
  } while (std::next_permutation(order.begin(), order.end()));

  const ConvexPointSet four = points({{1, 3}, {-3, 1}, {-1, -3}, {3, -1}});
  const Embedding crossing({0, 2, 1, 3});
  const auto prefix = check_planarity_prefix(four, crossing);
  EXPECT_FALSE(prefix.planar);
  EXPECT_EQ(prefix.first_bad_index, 2u);  // {p0, p2} is not an arc
  EXPECT_FALSE(check_planarity_segments(four, crossing).planar);
}

TEST(Report, FirstViolation) {
  const ConvexPointSet s = s5();
  const auto ok = validate_embedding(DirPath::parse("URDU"), s, kTrace);
  EXPECT_TRUE(ok.is_pdce());
  EXPECT_TRUE(ok.planar_segments);
  EXPECT_FALSE(ok.first_violation.has_value());

  const auto bad = validate_embedding(DirPath::parse("DRDU"), s, kTrace);
  EXPECT_FALSE(bad.is_pdce());
  ASSERT_TRUE(bad.first_violation.has_value());
  EXPECT_EQ(*bad.first_violation, (Violation{ViolationKind::Direction, 1}));

  EXPECT_THROW(validate_embedding(DirPath::parse("UU"), s, kTrace), Error);
  EXPECT_THROW(validate_embedding(DirPath::parse("URDU"), s, Embedding({0, 0, 1, 2, 3})), Error);
}

// Both checkers against the reference segment test on random permutations.
TEST(Planarity, AgreesWithReference) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 1 + rng() % 12;
    const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::General);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Embedding e(order);
    const bool want = pdce::testing::simple_polyline(pdce::testing::placed(s, e));
    EXPECT_EQ(check_planarity_prefix(s, e).planar, want);
    EXPECT_EQ(check_planarity_segments(s, e).planar, want);
  }
}
