#include "pdce/decider.hpp"

#include "pdce/error.hpp"
#include "pdce/validator.hpp"

namespace pdce {

std::vector<std::size_t> DPTable::entries(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  if (has_low(i, j)) out.push_back(j);
  if (has_high(i, j)) out.push_back((j + i - 1) % n_);
  return out;
}

DPTable::End DPTable::predecessor(std::size_t i, std::size_t j, End which) const {
  const std::uint8_t bit = which == End::Low ? kLowPredHigh : kHighPredHigh;
  return (cell(i, j) & bit) ? End::High : End::Low;
}

std::size_t DPTable::populated_entries() const {
  std::size_t count = 0;
  for (std::uint8_t c : cells_) count += (c & kLow ? 1 : 0) + (c & kHigh ? 1 : 0);
  return count;
}

DPTable dp_table(const DirPath& p, const ConvexPointSet& s) {
  const std::size_t n = s.size();
  if (p.vertex_count() != n)
    throw Error(ErrorCode::SizeMismatch,
                "path has " + std::to_string(p.vertex_count()) + " vertices, set has " + std::to_string(n) + " points");
  DPTable table(n);
  for (std::size_t j = 0; j < n; ++j) table.set(1, j, DPTable::End::Low, DPTable::End::Low);

  using End = DPTable::End;
  for (std::size_t i = 2; i <= n; ++i) {
    const DirLabel d = p.label(i - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t hi = (j + i - 1) % n;
      // v_i at the low end j: the prefix v_1..v_{i-1} fills arc j+1..j+i-1.
      const std::size_t up = (j + 1) % n;
      if (table.has_low(i - 1, up) && direction_ok(d, s[up], s[j])) {
        table.set(i, j, End::Low, End::Low);
      } else if (table.has_high(i - 1, up) && direction_ok(d, s[hi], s[j])) {
        table.set(i, j, End::Low, End::High);
      }
      // v_i at the high end: the prefix fills arc j..j+i-2.
      const std::size_t prev_hi = (j + i - 2) % n;
      if (table.has_low(i - 1, j) && direction_ok(d, s[j], s[hi])) {
        table.set(i, j, End::High, End::Low);
      } else if (table.has_high(i - 1, j) && direction_ok(d, s[prev_hi], s[hi])) {
        table.set(i, j, End::High, End::High);
      }
    }
  }
  return table;
}

std::optional<Embedding> decide_pdce(const DirPath& p, const ConvexPointSet& s) {
  const DPTable table = dp_table(p, s);
  const std::size_t n = s.size();
  using End = DPTable::End;
  std::optional<std::size_t> start;
  End end = End::Low;
  for (std::size_t j = 0; j < n && !start; ++j) {
    if (table.has_low(n, j)) {
      start = j;
    } else if (table.has_high(n, j)) {
      start = j;
      end = End::High;
    }
  }
  if (!start) return std::nullopt;

  std::vector<std::size_t> out(n);
  std::size_t j = *start;
  for (std::size_t i = n; i >= 1; --i) {
    out[i - 1] = end == End::Low ? j : (j + i - 1) % n;
    if (i == 1) break;
    const End pred = table.predecessor(i, j, end);
    if (end == End::Low) j = (j + 1) % n;
    end = pred;
  }
  Embedding e(std::move(out));
  if (!is_pdce(p, s, e)) throw Error(ErrorCode::InternalCaseError, "reconstructed witness fails validation");
  return e;
}

}  // namespace pdce
