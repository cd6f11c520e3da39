#pragma once

// Direction-labelled paths and the reverse / rotate / mirror operators acting
// on paths, point sets and embeddings.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdce/geometry.hpp"

namespace pdce {

enum class DirLabel : std::uint8_t { U, D, L, R };

char to_char(DirLabel d);
DirLabel label_from_char(char c);

/// Opposite label: U <-> D, L <-> R.
DirLabel inverse(DirLabel d);
/// Label after a counterclockwise quarter turn: U -> L -> D -> R -> U.
DirLabel rotate(DirLabel d);
/// Label after mirroring through a vertical line: L <-> R.
DirLabel mirror(DirLabel d);

/// Subset of {U, D, L, R}.
class DirectionSet {
 public:
  constexpr DirectionSet() = default;
  constexpr DirectionSet(std::initializer_list<DirLabel> labels) {
    for (DirLabel d : labels) insert(d);
  }

  constexpr void insert(DirLabel d) { bits_ |= mask(d); }
  constexpr bool contains(DirLabel d) const { return bits_ & mask(d); }
  constexpr bool subset_of(DirectionSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  std::string to_string() const;

  friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

 private:
  static constexpr unsigned mask(DirLabel d) { return 1U << static_cast<unsigned>(d); }
  unsigned bits_ = 0;
};

/// Path v_1, ..., v_n given by its edge labels d_1, ..., d_{n-1}.
class DirPath {
 public:
  DirPath() = default;
  explicit DirPath(std::vector<DirLabel> labels) : labels_(std::move(labels)) {}

  /// Parses a string over {U, D, L, R}; the empty string is the one-vertex path.
  static DirPath parse(std::string_view text);

  std::size_t vertex_count() const noexcept { return labels_.size() + 1; }
  std::size_t edge_count() const noexcept { return labels_.size(); }
  /// Label d_i of edge (v_i, v_{i+1}), 1-based.
  DirLabel label(std::size_t i) const { return labels_.at(i - 1); }
  std::span<const DirLabel> labels() const noexcept { return labels_; }

  /// Subpath P_{i,j} = d_i ... d_j (1-based, inclusive). P_{i,i-1} is the
  /// single vertex v_i and yields the empty label sequence.
  DirPath slice(std::size_t i, std::size_t j) const;

  std::string to_string() const;

  friend bool operator==(const DirPath&, const DirPath&) = default;

 private:
  std::vector<DirLabel> labels_;
};

DirectionSet directions_used(const DirPath& p);

DirPath reverse(const DirPath& p);
DirPath rotate(const DirPath& p);
DirPath mirror(const DirPath& p);
/// Applies a label map edge by edge, order unchanged.
DirPath relabel(const DirPath& p, DirLabel (*map)(DirLabel));

/// Injective map from path vertices to canonical point indices of a set;
/// entry k is the point of vertex v_{k+1}.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(std::vector<std::size_t> assignment) : assignment_(std::move(assignment)) {}

  std::size_t size() const noexcept { return assignment_.size(); }
  /// Point of vertex v_i, 1-based.
  std::size_t vertex(std::size_t i) const { return assignment_.at(i - 1); }
  std::size_t operator[](std::size_t k) const { return assignment_[k]; }
  std::span<const std::size_t> assignment() const noexcept { return assignment_; }

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;

 private:
  std::vector<std::size_t> assignment_;
};

/// Throws InvalidEmbedding unless e is a total injective map of an
/// n-vertex path into a set of n points.
void require_well_formed(const Embedding& e, std::size_t n);

/// E^I: the same drawing read backwards, an embedding of reverse(P).
Embedding reverse_embedding(const Embedding& e);

/// R(S): every point (x, y) becomes (-y, x), re-canonicalised.
ConvexPointSet rotate_set(const ConvexPointSet& s);
/// M(S): every point (x, y) becomes (-x, y), re-canonicalised.
ConvexPointSet mirror_set(const ConvexPointSet& s);

/// Canonical index in rotate_set(s) / mirror_set(s) of each index of s.
std::vector<std::size_t> rotate_index_map(const ConvexPointSet& s);
std::vector<std::size_t> mirror_index_map(const ConvexPointSet& s);

/// R(E), an embedding on rotate_set(s) of rotate(P) when e embeds P on s.
Embedding rotate_embedding(const Embedding& e, const ConvexPointSet& s);
/// M(E), an embedding on mirror_set(s) of mirror(P) when e embeds P on s.
Embedding mirror_embedding(const Embedding& e, const ConvexPointSet& s);

}  // namespace pdce
