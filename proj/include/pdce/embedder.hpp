#pragma once

// Constructive planar direction-consistent embeddings on convex point sets.
//
// Every public function returns an embedding that has been re-checked with
// the validator; a failed check raises InternalCaseError.

#include <cstddef>
#include <string>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

/// Places v_n, ..., v_2 on the topmost / bottommost / leftmost / rightmost
/// free point according to the label of the incoming edge; v_1 takes the
/// last free point. Always direction-consistent; planar only on the set
/// classes handled below.
Embedding backward_embedding(const DirPath& p, const ConvexPointSet& s);

/// {U,D,R}-path on a left-sided set. E(v_n) is t(S), b(S) or r(S) for a last
/// label U, D or R.
Embedding embed_udr_left_sided(const DirPath& p, const ConvexPointSet& s);

/// {U,D,R}-path on a right-sided set, by rotating the set by a half turn and
/// embedding the reversed rotated path. E(v_1) is b(S), t(S) or l(S) for a
/// first label U, D or R.
Embedding embed_udr_right_sided(const DirPath& p, const ConvexPointSet& s);

/// {U,R}-path on a strip-convex set. E(v_1) is b(S) or l(S); E(v_n) is t(S)
/// after a last label U and r(S) after R.
Embedding embed_ur_strip(const DirPath& p, const ConvexPointSet& s);

enum class CaseTag {
  LeftSidedWhole,   // nothing right of line b(S)t(S): the set is left-sided
  RightSidedWhole,  // nothing left of line b(S)t(S): the set is right-sided
  C1,               // d_m = D, d_{m+1} in {U,R}
  C2,               // d_m in {U,R}, d_{m+1} = D
  C3,               // d_m = d_{m+1} = D
  C4A,              // U/R run fits vertically between b(S) and t(S)
  C4B,              // run reaches past t(S) with d_beta = U
  C4C,              // run reaches past b(S) with d_alpha = U
  C4D,              // both, d_alpha = d_beta = U
};

std::string to_string(CaseTag tag);

enum class StepMethod { LeftSided, RightSided, UpRightStrip, SortUp, SortDown };

std::string to_string(StepMethod method);

/// Embeds the subpath v_first .. v_last on `points` (canonical indices of the
/// whole set). Consecutive steps share their boundary vertex and point.
struct PlanStep {
  std::string name;
  StepMethod method = StepMethod::LeftSided;
  std::size_t first_vertex = 1;
  std::size_t last_vertex = 1;
  std::vector<std::size_t> points;
};

struct CasePlan {
  CaseTag tag = CaseTag::C1;
  // i <= alpha but d_alpha = R: the U/R run is treated as starting at alpha+1.
  bool low_shift = false;
  // j >= beta but d_beta = R: the U/R run is treated as ending at beta-1.
  bool high_shift = false;
  std::size_t m = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  // Maximal U/R run P_{i,j} around d_m, d_{m+1} (Case 4) and its effective
  // bounds after the shifts above.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t run_first = 0;
  std::size_t run_last = 0;
  // Pure runs: the D run P_{a,b} of Case 3, the U run P_{a,b} of Cases 4B-4D
  // and the second U run P_{c,e} of Case 4D. Zero when unused.
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t e = 0;
  std::vector<PlanStep> steps;

  const PlanStep* step(const std::string& name) const;
};

/// Chooses the construction for a {U,D,R}-path on a set with t(S) strictly
/// right of b(S), n >= 2.
CasePlan plan_udr_case(const DirPath& p, const ConvexPointSet& s);

/// Runs plan_udr_case and assembles the pieces.
Embedding embed_udr_convex(const DirPath& p, const ConvexPointSet& s);

/// Any path using at most three labels, any convex set of matching size.
Embedding embed_three_directional(const DirPath& p, const ConvexPointSet& s);

/// Any path on a monotone-chain set: on an increasing chain R behaves as U and
/// L as D (decreasing chain: R as D, L as U).
Embedding embed_quarter_convex(const DirPath& p, const ConvexPointSet& s);

}  // namespace pdce
