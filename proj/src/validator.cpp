#include "pdce/validator.hpp"

#include "pdce/error.hpp"

namespace pdce {

std::string to_string(ViolationKind kind) { return kind == ViolationKind::Direction ? "direction" : "planarity"; }

bool direction_ok(DirLabel d, const Point& from, const Point& to) {
  switch (d) {
    case DirLabel::U: return to.y > from.y;
    case DirLabel::D: return to.y < from.y;
    case DirLabel::L: return to.x < from.x;
    case DirLabel::R: return to.x > from.x;
  }
  return false;
}

namespace {

void require_shapes(const DirPath& p, const ConvexPointSet& s, const Embedding& e) {
  if (p.vertex_count() != s.size())
    throw Error(ErrorCode::SizeMismatch,
                "path has " + std::to_string(p.vertex_count()) + " vertices, set has " + std::to_string(s.size()) + " points");
  require_well_formed(e, s.size());
}

}  // namespace

DirectionCheck check_direction_consistency(const DirPath& p, const ConvexPointSet& s, const Embedding& e) {
  require_shapes(p, s, e);
  for (std::size_t i = 1; i <= p.edge_count(); ++i)
    if (!direction_ok(p.label(i), s[e.vertex(i)], s[e.vertex(i + 1)])) return {false, i};
  return {};
}

PlanarityCheck check_planarity_prefix(const ConvexPointSet& s, const Embedding& e) {
  require_well_formed(e, s.size());
  const std::size_t n = s.size();
  if (n <= 1) return {};
  // The occupied arc runs counterclockwise from `lo` to `hi`.
  std::size_t lo = e[0];
  std::size_t hi = e[0];
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t p = e[k];
    if (p == s.prev(lo)) {
      lo = p;
    } else if (p == s.next(hi)) {
      hi = p;
    } else {
      return {false, k + 1};
    }
  }
  return {};
}

PlanarityCheck check_planarity_segments(const ConvexPointSet& s, const Embedding& e) {
  require_well_formed(e, s.size());
  const std::size_t edges = s.size() > 0 ? s.size() - 1 : 0;
  for (std::size_t j = 0; j < edges; ++j) {
    const Point& a1 = s[e[j]];
    const Point& a2 = s[e[j + 1]];
    for (std::size_t k = j + 1; k < edges; ++k) {
      const Point& b1 = s[e[k]];
      const Point& b2 = s[e[k + 1]];
      if (k == j + 1) {
        // Adjacent edges share e[j+1]; they may touch nowhere else.
        if (orientation(a1, a2, b2) == 0 && (segments_intersect(a1, a2, b2, b2) || segments_intersect(b1, b2, a1, a1)))
          return {false, j + 1};
        continue;
      }
      if (segments_intersect(a1, a2, b1, b2)) return {false, j + 1};
    }
  }
  return {};
}

ValidationReport validate_embedding(const DirPath& p, const ConvexPointSet& s, const Embedding& e) {
  ValidationReport r;
  const DirectionCheck dir = check_direction_consistency(p, s, e);
  const PlanarityCheck pre = check_planarity_prefix(s, e);
  const PlanarityCheck seg = check_planarity_segments(s, e);
  r.direction_consistent = dir.consistent;
  r.planar_prefix = pre.planar;
  r.planar_segments = seg.planar;
  // Order violations by the path position they occur at: edge i ends at v_{i+1}.
  if (dir.first_bad_edge && (!pre.first_bad_index || *dir.first_bad_edge + 1 <= *pre.first_bad_index))
    r.first_violation = Violation{ViolationKind::Direction, *dir.first_bad_edge};
  else if (pre.first_bad_index)
    r.first_violation = Violation{ViolationKind::Planarity, *pre.first_bad_index};
  return r;
}

bool is_pdce(const DirPath& p, const ConvexPointSet& s, const Embedding& e) {
  return check_direction_consistency(p, s, e).consistent && check_planarity_prefix(s, e).planar;
}

}  // namespace pdce
