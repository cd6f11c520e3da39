#pragma once

// Reference implementations for tests. They share no code with the library
// beyond the Point type: plain long long arithmetic on small coordinates and
// enumeration of all permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce::testing {

inline long long turn(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int sgn(long long v) { return (v > 0) - (v < 0); }

inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments share a point.
inline bool touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sgn(turn(a, b, c)), o2 = sgn(turn(a, b, d)), o3 = sgn(turn(c, d, a)), o4 = sgn(turn(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) || (o3 == 0 && on_segment(c, d, a)) ||
         (o4 == 0 && on_segment(c, d, b));
}

// Polyline through pts (in path order) has no crossing; adjacent edges may
// only share their common vertex.
inline bool simple_polyline(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = i + 1; j + 1 < m; ++j) {
      if (j == i + 1) {
        // collinear fold-back is the only way adjacent edges can overlap
        if (turn(pts[i], pts[i + 1], pts[j + 1]) == 0 && on_segment(pts[i], pts[i + 1], pts[j + 1])) return false;
        if (turn(pts[i], pts[i + 1], pts[j + 1]) == 0 && on_segment(pts[j], pts[j + 1], pts[i])) return false;
        continue;
      }
      if (touch(pts[i], pts[i + 1], pts[j], pts[j + 1])) return false;
    }
  return true;
}

inline bool follows(char label, const Point& from, const Point& to) {
  switch (label) {
    case 'U': return to.y > from.y;
    case 'D': return to.y < from.y;
    case 'L': return to.x < from.x;
    case 'R': return to.x > from.x;
  }
  return false;
}

inline bool directed_ok(const std::string& path, const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (!follows(path[i], pts[i], pts[i + 1])) return false;
  return true;
}

inline std::vector<Point> placed(const ConvexPointSet& s, const Embedding& e) {
  std::vector<Point> pts;
  for (std::size_t q : e.assignment()) pts.push_back(s[q]);
  return pts;
}

// Independent PDCE test: direction by coordinates, planarity by segments.
inline bool reference_pdce(const std::string& path, const ConvexPointSet& s, const Embedding& e) {
  const auto pts = placed(s, e);
  return directed_ok(path, pts) && simple_polyline(pts);
}

struct PermutationCensus {
  std::size_t planar = 0;
  std::size_t pdce = 0;
};

// Every one of the n! vertex orders of the set.
inline PermutationCensus census(const std::string& path, const ConvexPointSet& s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  PermutationCensus out;
  do {
    std::vector<Point> pts;
    for (std::size_t q : order) pts.push_back(s[q]);
    if (!simple_polyline(pts)) continue;
    ++out.planar;
    if (directed_ok(path, pts)) ++out.pdce;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::string random_path(std::mt19937_64& rng, std::size_t edges, const std::string& alphabet) {
  std::string out;
  for (std::size_t k = 0; k < edges; ++k) out.push_back(alphabet[rng() % alphabet.size()]);
  return out;
}

inline ConvexPointSet points(std::initializer_list<Point> pts) {
  std::vector<Point> v(pts);
  return validate(v);
}

}  // namespace pdce::testing
