#include "pdce/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pdce/error.hpp"

namespace pdce {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::DuplicateY: return "DuplicateY";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::FourDirectional: return "FourDirectional";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::InternalCaseError: return "InternalCaseError";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(' << p.x << ',' << p.y << ')';
  return os.str();
}

__int128 cross(const Point& a, const Point& b, const Point& c) {
  const __int128 abx = b.x - a.x;
  const __int128 aby = b.y - a.y;
  const __int128 acx = c.x - a.x;
  const __int128 acy = c.y - a.y;
  return abx * acy - aby * acx;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const __int128 v = cross(a, b, c);
  return (v > 0) - (v < 0);
}

namespace {

bool on_segment(const Point& p, const Point& q, const Point& r) {
  // r is collinear with p, q; test bounding box containment.
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

}  // namespace

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// ConvexPointSet

ConvexPointSet::ConvexPointSet(std::vector<Point> canonical) : points_(std::move(canonical)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (p.y > points_[top_].y) top_ = i;
    if (p.y < points_[bottom_].y) bottom_ = i;
    if (p.x < points_[left_].x) left_ = i;
    if (p.x > points_[right_].x) right_ = i;
  }
}

namespace {

std::size_t topmost(std::span<const Point> pts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].y > pts[best].y) best = i;
  return best;
}

void check_range(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    if (p.x > kCoordinateLimit || p.x < -kCoordinateLimit || p.y > kCoordinateLimit || p.y < -kCoordinateLimit)
      throw Error(ErrorCode::CoordinateOutOfRange, "point " + to_string(p) + " exceeds |coordinate| <= 2^30", {i});
  }
}

// Reports the first pair (in coordinate order) sharing an x or a y value.
void check_distinct_coordinates(std::span<const Point> pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  auto report = [&](auto key, ErrorCode code, const char* axis) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(pts[a]) < key(pts[b]); });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (key(pts[order[k - 1]]) == key(pts[order[k]])) {
        std::size_t a = std::min(order[k - 1], order[k]);
        std::size_t b = std::max(order[k - 1], order[k]);
        throw Error(code, std::string("points ") + std::to_string(a) + " and " + std::to_string(b) + " share " + axis + " = " +
                              std::to_string(key(pts[a])),
                    {a, b});
      }
    }
  };
  report([](const Point& p) { return p.x; }, ErrorCode::DuplicateX, "x");
  report([](const Point& p) { return p.y; }, ErrorCode::DuplicateY, "y");
}

// Half-plane index used for exact angular ordering of direction vectors.
int half(const Point& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angle_less(const Point& u, const Point& v) {
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv;
  return orientation(Point{0, 0}, u, v) > 0;
}

}  // namespace

ConvexPointSet ConvexPointSet::from_hull_order(std::vector<Point> ccw) {
  if (ccw.empty()) throw Error(ErrorCode::EmptyInput, "point list is empty");
  check_range(ccw);
  check_distinct_coordinates(ccw);
  const std::size_t n = ccw.size();
  if (n >= 3) {
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = ccw[i];
      const Point& b = ccw[(i + 1) % n];
      const Point& c = ccw[(i + 2) % n];
      const int o = orientation(a, b, c);
      if (o == 0) throw Error(ErrorCode::CollinearTriple, "consecutive hull points are collinear", {i, (i + 1) % n, (i + 2) % n});
      if (o < 0) throw Error(ErrorCode::NotConvexPosition, "hull order makes a right turn", {i, (i + 1) % n, (i + 2) % n});
      const Point e1{b.x - a.x, b.y - a.y};
      const Point e2{c.x - b.x, c.y - b.y};
      if (!angle_less(e1, e2)) ++wraps;
    }
    if (wraps != 1) throw Error(ErrorCode::NotConvexPosition, "hull order winds more than once");
  }
  std::rotate(ccw.begin(), ccw.begin() + static_cast<std::ptrdiff_t>(topmost(ccw)), ccw.end());
  return ConvexPointSet(std::move(ccw));
}

std::size_t ConvexPointSet::extreme_index(Extreme which) const noexcept {
  switch (which) {
    case Extreme::Top: return top_;
    case Extreme::Bottom: return bottom_;
    case Extreme::Left: return left_;
    case Extreme::Right: return right_;
  }
  return top_;
}

bool ConvexPointSet::consecutive_or_equal(std::size_t i, std::size_t j) const noexcept {
  return i == j || next(i) == j || next(j) == i;
}

std::size_t ConvexPointSet::index_of(const Point& p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(it - points_.begin());
}

std::pair<ConvexPointSet, std::vector<std::size_t>> ConvexPointSet::subset(std::vector<std::size_t> indices) const {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw Error(ErrorCode::EmptyInput, "empty subset");
  // Ascending canonical indices are already in counterclockwise order; a
  // subset of a convex set in general position needs no re-validation.
  std::size_t shift = 0;
  for (std::size_t k = 1; k < indices.size(); ++k)
    if (points_[indices[k]].y > points_[indices[shift]].y) shift = k;
  std::rotate(indices.begin(), indices.begin() + static_cast<std::ptrdiff_t>(shift), indices.end());
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t idx : indices) pts.push_back(points_.at(idx));
  return {ConvexPointSet(std::move(pts)), std::move(indices)};
}

ConvexPointSet validate(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "point list is empty");
  check_range(points);
  check_distinct_coordinates(points);
  const std::size_t n = points.size();
  if (n <= 2) {
    std::vector<Point> pts(points.begin(), points.end());
    // Two points are trivially in convex position; list them from the top.
    if (n == 2 && pts[1].y > pts[0].y) std::swap(pts[0], pts[1]);
    return ConvexPointSet::from_hull_order(std::move(pts));
  }

  // Strict monotone-chain hull over x-sorted points (x values are distinct).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
  std::vector<std::size_t> hull;
  hull.reserve(2 * n);
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t idx = pass == 0 ? order[k] : order[n - 1 - k];
      while (hull.size() >= base + 2 &&
             orientation(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0)
        hull.pop_back();
      hull.push_back(idx);
    }
    hull.pop_back();  // the last point of each chain starts the other one
  }

  if (hull.size() == n) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t idx : hull) pts.push_back(points[idx]);
    return ConvexPointSet::from_hull_order(std::move(pts));
  }

  std::vector<bool> on_hull(n, false);
  for (std::size_t idx : hull) on_hull[idx] = true;
  for (std::size_t q = 0; q < n; ++q) {
    if (on_hull[q]) continue;
    for (std::size_t k = 0; k < hull.size(); ++k) {
      const std::size_t a = hull[k];
      const std::size_t b = hull[(k + 1) % hull.size()];
      if (orientation(points[a], points[b], points[q]) == 0 && on_segment(points[a], points[b], points[q])) {
        std::vector<std::size_t> ids{a, b, q};
        std::sort(ids.begin(), ids.end());
        throw Error(ErrorCode::CollinearTriple,
                    "points " + std::to_string(ids[0]) + ", " + std::to_string(ids[1]) + ", " + std::to_string(ids[2]) +
                        " are collinear",
                    ids);
      }
    }
    throw Error(ErrorCode::NotConvexPosition, "point " + std::to_string(q) + " " + to_string(points[q]) + " is not a hull vertex",
                {q});
  }
  throw Error(ErrorCode::NotConvexPosition, "hull construction failed");
}

Point extreme(const ConvexPointSet& s, Extreme which) { return s[s.extreme_index(which)]; }

// ---------------------------------------------------------------------------
// Classification

std::string to_string(SetTag tag) {
  switch (tag) {
    case SetTag::LeftSided: return "LeftSided";
    case SetTag::RightSided: return "RightSided";
    case SetTag::OneSided: return "OneSided";
    case SetTag::QuarterIncreasing: return "QuarterIncreasing";
    case SetTag::QuarterDecreasing: return "QuarterDecreasing";
    case SetTag::StripConvex: return "StripConvex";
    case SetTag::GeneralConvex: return "GeneralConvex";
  }
  return "Unknown";
}

std::vector<SetTag> PointSetClass::tags() const {
  std::vector<SetTag> out;
  for (SetTag t : {SetTag::LeftSided, SetTag::RightSided, SetTag::OneSided, SetTag::QuarterIncreasing,
                   SetTag::QuarterDecreasing, SetTag::StripConvex, SetTag::GeneralConvex})
    if (contains(t)) out.push_back(t);
  return out;
}

PointSetClass classify(const ConvexPointSet& s) {
  PointSetClass cls;
  cls.insert(SetTag::GeneralConvex);
  const std::size_t t = s.top();
  const std::size_t b = s.bottom();
  // Clockwise from t(S) is the previous canonical index.
  if (s.prev(t) == b) cls.insert(SetTag::LeftSided);
  if (s.next(t) == b) cls.insert(SetTag::RightSided);
  if (cls.contains(SetTag::LeftSided) || cls.contains(SetTag::RightSided)) cls.insert(SetTag::OneSided);
  if (s.consecutive_or_equal(b, s.left()) && s.consecutive_or_equal(t, s.right())) cls.insert(SetTag::StripConvex);

  std::vector<std::size_t> by_x(s.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t c) { return s[a].x < s[c].x; });
  bool inc = true;
  bool dec = true;
  for (std::size_t k = 1; k < by_x.size(); ++k) {
    if (s[by_x[k]].y < s[by_x[k - 1]].y) inc = false;
    if (s[by_x[k]].y > s[by_x[k - 1]].y) dec = false;
  }
  if (inc) cls.insert(SetTag::QuarterIncreasing);
  if (dec) cls.insert(SetTag::QuarterDecreasing);
  return cls;
}

SplitDescriptor split_by_bt_line(const ConvexPointSet& s) {
  const Point& b = s[s.bottom()];
  const Point& t = s[s.top()];
  if (!(t.x > b.x))
    throw Error(ErrorCode::PreconditionViolated, "t(S) " + to_string(t) + " is not strictly right of b(S) " + to_string(b));
  SplitDescriptor d;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Point& p = s[i];
    if (p.x < b.x) ++d.alpha;
    if (p.x <= t.x) ++d.beta;
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (i == s.bottom()) continue;
    const int side = orientation(b, t, s[i]);
    (side > 0 ? d.left_part : d.right_part).push_back(i);
  }
  // right_part is stored counterclockwise from b(S); canonical order already
  // lists it that way since every index in it exceeds bottom().
  d.m = d.left_part.size();
  return d;
}

}  // namespace pdce
