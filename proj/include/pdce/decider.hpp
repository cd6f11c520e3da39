#pragma once

// Quadratic dynamic program deciding whether a path of any labels has a
// planar direction-consistent embedding on a convex set.
//
// Points are indexed counterclockwise from t(S) (the canonical order). A
// planar embedding maps every prefix v_1..v_i onto a cyclic arc, so the
// state is the arc start j and which end of the arc holds v_i.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

class DPTable {
 public:
  enum class End : std::uint8_t { Low, High };

  DPTable() = default;
  explicit DPTable(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  /// E[i][j] contains j: v_i can sit at the low end of arc j..j+i-1.
  bool has_low(std::size_t i, std::size_t j) const { return cell(i, j) & kLow; }
  /// E[i][j] contains j+i-1 (mod n): v_i can sit at the high end.
  bool has_high(std::size_t i, std::size_t j) const { return cell(i, j) & kHigh; }
  /// Positions stored in E[i][j] (0, 1 or 2 of them; i is 1-based, j is a
  /// 0-based canonical index).
  std::vector<std::size_t> entries(std::size_t i, std::size_t j) const;
  /// Which end of the predecessor arc held v_{i-1} for the given entry.
  End predecessor(std::size_t i, std::size_t j, End which) const;
  std::size_t populated_entries() const;

  void set(std::size_t i, std::size_t j, End which, End pred) {
    auto& c = cell(i, j);
    if (which == End::Low) {
      c |= kLow;
      if (pred == End::High) c |= kLowPredHigh;
    } else {
      c |= kHigh;
      if (pred == End::High) c |= kHighPredHigh;
    }
  }

 private:
  static constexpr std::uint8_t kLow = 1;
  static constexpr std::uint8_t kHigh = 2;
  static constexpr std::uint8_t kLowPredHigh = 4;
  static constexpr std::uint8_t kHighPredHigh = 8;

  std::uint8_t& cell(std::size_t i, std::size_t j) { return cells_[(i - 1) * n_ + j]; }
  std::uint8_t cell(std::size_t i, std::size_t j) const { return cells_[(i - 1) * n_ + j]; }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// Fills the table. E[1][j] = {j}; for i = 1 only the low end is stored.
DPTable dp_table(const DirPath& p, const ConvexPointSet& s);

/// A witness embedding if one exists. Among the final cells the smallest
/// arc start wins, low end before high end; back-pointers prefer the
/// predecessor's low end.
std::optional<Embedding> decide_pdce(const DirPath& p, const ConvexPointSet& s);

}  // namespace pdce
