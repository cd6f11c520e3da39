#pragma once

// Exhaustive ground truth for small instances.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

inline constexpr std::size_t kDefaultBruteForceBound = 20;
inline constexpr std::size_t kDefaultSearchBudget = 100000;
inline constexpr std::int64_t kSearchGrid = 64;

/// Calls `visit` on every embedding whose prefixes are all hull arcs: v_1 in
/// increasing index order, then the arc grows clockwise (prev) before
/// counterclockwise (next). n * 2^(n-2) embeddings for n >= 2.
void for_each_planar_embedding(const ConvexPointSet& s, const std::function<void(const Embedding&)>& visit);

std::vector<Embedding> enumerate_planar_embeddings(const ConvexPointSet& s);

/// All PDCEs of P on S, in enumeration order. Throws BoundExceeded when
/// n > bound and SizeMismatch when the sizes differ.
std::vector<Embedding> brute_force_pdce(const DirPath& p, const ConvexPointSet& s,
                                        std::size_t bound = kDefaultBruteForceBound);

/// Undirected plane spanning paths on S: half the planar embeddings (1 for
/// n = 1).
std::uint64_t count_plane_spanning_paths(const ConvexPointSet& s);

struct SearchOptions {
  DirPath path = DirPath::parse("LULRDR");
  // LeftSided samples integer sets in [0, kSearchGrid]^2; other modes use
  // generate_random_convex with a fresh seed per sample.
  GenerationMode family = GenerationMode::LeftSided;
  std::size_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 1;
};

struct SearchResult {
  ConvexPointSet set;
  std::size_t samples = 0;   // samples drawn, rejected ones included
  std::size_t distinct = 0;  // combinatorially distinct sets tested
};

/// First sampled set on which P has no PDCE, confirmed by both the brute
/// force and the dynamic program. Throws NotFoundWithinBudget.
SearchResult search_counterexample(const SearchOptions& options);

/// Line-oriented record of every planar candidate of P on S with its first
/// direction violation ("ok" for a PDCE), preceded by the path and points.
std::string certificate_text(const DirPath& p, const ConvexPointSet& s);
/// Lowercase hex SHA-256 of certificate_text.
std::string certificate_sha256(const DirPath& p, const ConvexPointSet& s);

}  // namespace pdce
