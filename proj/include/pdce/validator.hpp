#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

enum class ViolationKind { Direction, Planarity };

std::string to_string(ViolationKind kind);

/// Direction violations name the 1-based edge index i of d_i; planarity
/// violations name the 1-based vertex v_k whose placement first breaks the
/// consecutive-prefix property (or, for the segment checker, the smaller
/// index j of the first crossing edge pair).
struct Violation {
  ViolationKind kind = ViolationKind::Direction;
  std::size_t index = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct DirectionCheck {
  bool consistent = true;
  std::optional<std::size_t> first_bad_edge;
};

struct PlanarityCheck {
  bool planar = true;
  std::optional<std::size_t> first_bad_index;
};

struct ValidationReport {
  bool planar_prefix = false;
  bool planar_segments = false;
  bool direction_consistent = false;
  std::optional<Violation> first_violation;

  bool is_pdce() const noexcept { return planar_prefix && direction_consistent; }
};

/// Edge (v_i, v_{i+1}) labelled U needs y(E(v_{i+1})) > y(E(v_i)); D, L, R
/// likewise with strict comparisons.
bool direction_ok(DirLabel d, const Point& from, const Point& to);

DirectionCheck check_direction_consistency(const DirPath& p, const ConvexPointSet& s, const Embedding& e);

/// Every prefix v_1..v_k must occupy a cyclically consecutive arc of the hull.
PlanarityCheck check_planarity_prefix(const ConvexPointSet& s, const Embedding& e);

/// Pairwise exact segment test; valid for any point set, O(n^2).
PlanarityCheck check_planarity_segments(const ConvexPointSet& s, const Embedding& e);

/// Runs all three checks. Throws InvalidEmbedding / SizeMismatch when e is
/// not a total injective map of P onto S.
ValidationReport validate_embedding(const DirPath& p, const ConvexPointSet& s, const Embedding& e);

bool is_pdce(const DirPath& p, const ConvexPointSet& s, const Embedding& e);

}  // namespace pdce
