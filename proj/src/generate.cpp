#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pdce/error.hpp"
#include "pdce/geometry.hpp"

namespace pdce {

std::string to_string(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::General: return "general";
    case GenerationMode::LeftSided: return "left_sided";
    case GenerationMode::RightSided: return "right_sided";
    case GenerationMode::QuarterIncreasing: return "quarter_inc";
    case GenerationMode::QuarterDecreasing: return "quarter_dec";
    case GenerationMode::Strip: return "strip";
  }
  return "general";
}

GenerationMode parse_generation_mode(const std::string& name) {
  for (GenerationMode m : {GenerationMode::General, GenerationMode::LeftSided, GenerationMode::RightSided,
                           GenerationMode::QuarterIncreasing, GenerationMode::QuarterDecreasing, GenerationMode::Strip})
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::ParseError, "unknown generation mode '" + name + "'");
}

namespace {

using Rng = std::mt19937_64;

constexpr std::int64_t kGrid = std::int64_t{1} << 20;
// Valtr polygons with many vertices need room to avoid parallel edges.
constexpr std::int64_t kWideGrid = std::int64_t{1} << 28;
constexpr std::int64_t kStep = std::int64_t{1} << 14;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

int half(const Point& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

// Edge vectors sorted counterclockwise by angle; false if two are parallel.
bool sort_by_angle(std::vector<Point>& vecs, bool clockwise = false) {
  const Point origin{0, 0};
  std::sort(vecs.begin(), vecs.end(), [&](const Point& u, const Point& v) {
    if (half(u) != half(v)) return half(u) < half(v);
    return orientation(origin, u, v) > 0;
  });
  for (std::size_t k = 1; k < vecs.size(); ++k)
    if (half(vecs[k - 1]) == half(vecs[k]) && orientation(origin, vecs[k - 1], vecs[k]) == 0) return false;
  if (clockwise) std::reverse(vecs.begin(), vecs.end());
  return true;
}

std::vector<Point> walk(const Point& start, const std::vector<Point>& steps, bool close) {
  std::vector<Point> pts{start};
  for (std::size_t k = 0; k + (close ? 1 : 0) < steps.size(); ++k)
    pts.push_back(Point{pts.back().x + steps[k].x, pts.back().y + steps[k].y});
  return pts;
}

std::vector<std::int64_t> distinct_sorted(Rng& rng, std::size_t n, std::int64_t hi) {
  std::set<std::int64_t> seen;
  while (seen.size() < n) seen.insert(uniform(rng, 0, hi));
  return {seen.begin(), seen.end()};
}

// Splits sorted distinct values into two monotone chains between the
// extremes and returns the n signed components (Valtr's construction).
std::vector<std::int64_t> chain_components(Rng& rng, const std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  std::vector<std::int64_t> out;
  out.reserve(n);
  std::int64_t last_a = v.front();
  std::int64_t last_b = v.front();
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (coin(rng)) {
      out.push_back(v[k] - last_a);
      last_a = v[k];
    } else {
      out.push_back(last_b - v[k]);
      last_b = v[k];
    }
  }
  out.push_back(v.back() - last_a);
  out.push_back(last_b - v.back());
  return out;
}

std::vector<Point> valtr_polygon(Rng& rng, std::size_t n) {
  const std::int64_t grid = n > 64 ? kWideGrid : kGrid;
  auto xs = chain_components(rng, distinct_sorted(rng, n, grid));
  auto ys = chain_components(rng, distinct_sorted(rng, n, grid));
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<Point> vecs(n);
  for (std::size_t k = 0; k < n; ++k) vecs[k] = Point{xs[k], ys[k]};
  if (!sort_by_angle(vecs)) return {};
  return walk(Point{0, 0}, vecs, true);
}

// Convex chain from t(S) counterclockwise down to b(S): every step points
// strictly downward and the steps turn counterclockwise.
std::vector<Point> left_chain(Rng& rng, std::size_t n, std::int64_t dx_max, std::int64_t dy_max) {
  std::vector<Point> vecs(n - 1);
  for (auto& v : vecs) v = Point{uniform(rng, -dx_max, dx_max), -uniform(rng, 1, dy_max)};
  if (!sort_by_angle(vecs)) return {};
  return walk(Point{0, 0}, vecs, false);
}

// Monotone increasing convex chain from the bottom-left point to the top-right
// one, bulging either below (right-sided) or above (left-sided).
std::vector<Point> increasing_chain(Rng& rng, std::size_t n) {
  std::vector<Point> vecs(n - 1);
  for (auto& v : vecs) v = Point{uniform(rng, 1, kStep), uniform(rng, 1, kStep)};
  const bool below = std::bernoulli_distribution(0.5)(rng);
  if (!sort_by_angle(vecs, !below)) return {};
  auto pts = walk(Point{0, 0}, vecs, false);
  if (!below) std::reverse(pts.begin(), pts.end());  // keep counterclockwise order
  return pts;
}

std::vector<std::int64_t> random_composition(Rng& rng, std::int64_t total, std::size_t parts) {
  auto cuts = distinct_sorted(rng, parts - 1, total - 2);
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c + 1 - prev);
    prev = c + 1;
  }
  out.push_back(total - prev);
  return out;
}

// Quadrant-I chain b -> r, one edge r -> t, quadrant-III chain t -> l, one
// edge l -> b; strip-convex by construction when the closing edge points
// down and to the right.
std::vector<Point> strip_polygon(Rng& rng, std::size_t n) {
  const std::size_t lower = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(n) - 3));
  const std::size_t upper = n - 2 - lower;
  const auto k1 = static_cast<std::int64_t>(lower);
  const auto k3 = static_cast<std::int64_t>(upper);
  const std::int64_t x1 = uniform(rng, k1 + 1, kGrid / 4);
  const std::int64_t y1 = uniform(rng, k1 + 1, kGrid / 4);
  const std::int64_t a = uniform(rng, 1, kGrid / 16);
  const std::int64_t h = uniform(rng, 1, kGrid / 16);
  const std::int64_t x3_lo = std::max(k3 + 1, x1 - a + 1);
  const std::int64_t y3_hi = y1 + h - 1;
  if (y3_hi < k3 + 1) return {};
  const std::int64_t x3 = uniform(rng, x3_lo, x3_lo + kGrid / 4);
  const std::int64_t y3 = uniform(rng, k3 + 1, y3_hi);

  auto chain = [&](std::int64_t tx, std::int64_t ty, std::size_t k, int sign) {
    auto dx = k == 1 ? std::vector<std::int64_t>{tx} : random_composition(rng, tx, k);
    auto dy = k == 1 ? std::vector<std::int64_t>{ty} : random_composition(rng, ty, k);
    std::shuffle(dy.begin(), dy.end(), rng);
    std::vector<Point> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = Point{sign * dx[i], sign * dy[i]};
    return v;
  };
  auto v1 = chain(x1, y1, lower, 1);
  auto v3 = chain(x3, y3, upper, -1);
  if (!sort_by_angle(v1) || !sort_by_angle(v3)) return {};
  std::vector<Point> steps = v1;
  steps.push_back(Point{-a, h});
  steps.insert(steps.end(), v3.begin(), v3.end());
  return walk(Point{0, 0}, steps, false);
}

std::vector<Point> mirrored(std::vector<Point> pts) {
  for (auto& p : pts) p.x = -p.x;
  std::reverse(pts.begin(), pts.end());
  return pts;
}

SetTag required_tag(GenerationMode mode) {
  switch (mode) {
    case GenerationMode::LeftSided: return SetTag::LeftSided;
    case GenerationMode::RightSided: return SetTag::RightSided;
    case GenerationMode::QuarterIncreasing: return SetTag::QuarterIncreasing;
    case GenerationMode::QuarterDecreasing: return SetTag::QuarterDecreasing;
    case GenerationMode::Strip: return SetTag::StripConvex;
    case GenerationMode::General: break;
  }
  return SetTag::GeneralConvex;
}

std::vector<Point> sample(Rng& rng, std::size_t n, GenerationMode mode) {
  if (n <= 2) {
    auto xs = distinct_sorted(rng, n, kGrid);
    auto ys = distinct_sorted(rng, n, kGrid);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<Point> pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back(Point{xs[k], ys[k]});
    return pts;
  }
  switch (mode) {
    case GenerationMode::General: return valtr_polygon(rng, n);
    case GenerationMode::LeftSided: return left_chain(rng, n, kStep, kStep);
    case GenerationMode::RightSided: return mirrored(left_chain(rng, n, kStep, kStep));
    case GenerationMode::QuarterIncreasing: return increasing_chain(rng, n);
    case GenerationMode::QuarterDecreasing: return mirrored(increasing_chain(rng, n));
    case GenerationMode::Strip: return n <= 3 ? valtr_polygon(rng, n) : strip_polygon(rng, n);
  }
  return {};
}

}  // namespace

ConvexPointSet generate_random_convex(std::size_t n, std::uint64_t seed, GenerationMode mode) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "cannot generate an empty point set");
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    auto pts = sample(rng, n, mode);
    if (pts.size() != n) continue;
    try {
      ConvexPointSet s = validate(pts);
      if (classify(s).contains(required_tag(mode))) return s;
    } catch (const Error&) {
      // rejected sample: degenerate coordinates
    }
  }
  throw Error(ErrorCode::GenerationFailed, "no valid " + to_string(mode) + " set of size " + std::to_string(n) + " after " +
                                               std::to_string(kMaxGenerationAttempts) + " attempts");
}

std::optional<ConvexPointSet> sample_left_sided_in_grid(std::size_t n, std::int64_t grid, std::mt19937_64& rng) {
  if (n == 0) return std::nullopt;
  const std::int64_t dy_max = std::max<std::int64_t>(1, 2 * grid / static_cast<std::int64_t>(std::max<std::size_t>(n, 2) - 1));
  auto pts = left_chain(rng, std::max<std::size_t>(n, 1), grid / 2, dy_max);
  if (pts.size() != n) return std::nullopt;
  std::int64_t min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (max_x - min_x > grid || max_y - min_y > grid) return std::nullopt;
  const std::int64_t ox = uniform(rng, 0, grid - (max_x - min_x)) - min_x;
  const std::int64_t oy = uniform(rng, 0, grid - (max_y - min_y)) - min_y;
  for (auto& p : pts) p = Point{p.x + ox, p.y + oy};
  try {
    ConvexPointSet s = validate(pts);
    if (!classify(s).contains(SetTag::LeftSided)) return std::nullopt;
    return s;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace pdce
