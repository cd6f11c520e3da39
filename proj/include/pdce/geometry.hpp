#pragma once

// Exact integer geometry for point sets in convex and general position.
//
// All predicates evaluate 3-point determinants in 128-bit arithmetic. With
// coordinates bounded by 2^30 in magnitude no intermediate value can overflow.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pdce {

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

/// Sign of the cross product (b - a) x (c - a): +1 for a left turn,
/// -1 for a right turn, 0 for collinear points.
int orientation(const Point& a, const Point& b, const Point& c);

/// Twice the signed area of triangle abc, exact.
__int128 cross(const Point& a, const Point& b, const Point& c);

/// True iff the closed segments [p1,p2] and [q1,q2] share at least one point.
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

enum class Extreme { Top, Bottom, Left, Right };

/// A point set in general and convex position, stored counterclockwise
/// starting at the topmost point. Immutable after construction.
class ConvexPointSet {
 public:
  /// Builds a set from points already listed in counterclockwise hull order
  /// (any starting point). Verifies strict convexity and general position,
  /// then rotates the list so that it starts at the topmost point.
  static ConvexPointSet from_hull_order(std::vector<Point> ccw);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }

  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }
  std::size_t extreme_index(Extreme which) const noexcept;

  std::size_t next(std::size_t i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
  std::size_t prev(std::size_t i) const noexcept { return i == 0 ? size() - 1 : i - 1; }
  /// True when i and j are neighbours on the hull or coincide.
  bool consecutive_or_equal(std::size_t i, std::size_t j) const noexcept;

  /// Canonical index of p, or size() if p is not in the set.
  std::size_t index_of(const Point& p) const;

  /// The sub-set formed by the given canonical indices. The second member maps
  /// each index of the sub-set back to the index in this set.
  std::pair<ConvexPointSet, std::vector<std::size_t>> subset(std::vector<std::size_t> indices) const;

  friend bool operator==(const ConvexPointSet& a, const ConvexPointSet& b) { return a.points_ == b.points_; }

 private:
  explicit ConvexPointSet(std::vector<Point> canonical);

  std::vector<Point> points_;
  std::size_t top_ = 0;
  std::size_t bottom_ = 0;
  std::size_t left_ = 0;
  std::size_t right_ = 0;
};

/// Validates an arbitrary list of points and returns the canonical set.
/// Throws Error with DuplicateX, DuplicateY, CollinearTriple,
/// NotConvexPosition, CoordinateOutOfRange or EmptyInput; the error carries
/// the offending input indices.
ConvexPointSet validate(std::span<const Point> points);

Point extreme(const ConvexPointSet& s, Extreme which);

enum class SetTag {
  LeftSided,
  RightSided,
  OneSided,
  QuarterIncreasing,
  QuarterDecreasing,
  StripConvex,
  GeneralConvex,
};

std::string to_string(SetTag tag);

class PointSetClass {
 public:
  bool contains(SetTag tag) const noexcept { return (bits_ >> static_cast<unsigned>(tag)) & 1U; }
  void insert(SetTag tag) noexcept { bits_ |= 1U << static_cast<unsigned>(tag); }
  std::vector<SetTag> tags() const;

  friend bool operator==(const PointSetClass&, const PointSetClass&) = default;

 private:
  unsigned bits_ = 0;
};

PointSetClass classify(const ConvexPointSet& s);

/// Partition of S around the line through b(S) and t(S); requires t(S)
/// strictly to the right of b(S).
struct SplitDescriptor {
  std::size_t m = 0;      // points strictly left of the directed line b(S) -> t(S)
  std::size_t alpha = 0;  // points with x < x(b(S))
  std::size_t beta = 0;   // points with x <= x(t(S))
  std::vector<std::size_t> left_part;   // canonical indices, counterclockwise from t(S)
  std::vector<std::size_t> right_part;  // canonical indices, counterclockwise from b(S)
};

SplitDescriptor split_by_bt_line(const ConvexPointSet& s);

enum class GenerationMode { General, LeftSided, RightSided, QuarterIncreasing, QuarterDecreasing, Strip };

std::string to_string(GenerationMode mode);
GenerationMode parse_generation_mode(const std::string& name);

inline constexpr int kMaxGenerationAttempts = 1000;

/// Deterministic random convex set of n points for the given mode. Throws
/// GenerationFailed after kMaxGenerationAttempts rejected samples.
ConvexPointSet generate_random_convex(std::size_t n, std::uint64_t seed, GenerationMode mode);

/// One sample of a left-sided n-point set with coordinates in [0, grid]^2,
/// built constructively: t(S) on top, b(S) at the bottom, every other point
/// on a convex chain left of the line through them. Returns nullopt when the
/// sample is rejected (out of grid or degenerate).
std::optional<ConvexPointSet> sample_left_sided_in_grid(std::size_t n, std::int64_t grid, std::mt19937_64& rng);

}  // namespace pdce
