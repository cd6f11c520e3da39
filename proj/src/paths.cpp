#include "pdce/paths.hpp"

#include <algorithm>

#include "pdce/error.hpp"

namespace pdce {

char to_char(DirLabel d) {
  switch (d) {
    case DirLabel::U: return 'U';
    case DirLabel::D: return 'D';
    case DirLabel::L: return 'L';
    case DirLabel::R: return 'R';
  }
  return '?';
}

DirLabel label_from_char(char c) {
  switch (c) {
    case 'U': return DirLabel::U;
    case 'D': return DirLabel::D;
    case 'L': return DirLabel::L;
    case 'R': return DirLabel::R;
    default: break;
  }
  throw Error(ErrorCode::ParseError, std::string("invalid direction label '") + c + "'");
}

DirLabel inverse(DirLabel d) {
  switch (d) {
    case DirLabel::U: return DirLabel::D;
    case DirLabel::D: return DirLabel::U;
    case DirLabel::L: return DirLabel::R;
    case DirLabel::R: return DirLabel::L;
  }
  return d;
}

DirLabel rotate(DirLabel d) {
  switch (d) {
    case DirLabel::U: return DirLabel::L;
    case DirLabel::D: return DirLabel::R;
    case DirLabel::R: return DirLabel::U;
    case DirLabel::L: return DirLabel::D;
  }
  return d;
}

DirLabel mirror(DirLabel d) {
  switch (d) {
    case DirLabel::L: return DirLabel::R;
    case DirLabel::R: return DirLabel::L;
    default: return d;
  }
}

std::string DirectionSet::to_string() const {
  std::string out;
  for (DirLabel d : {DirLabel::U, DirLabel::D, DirLabel::L, DirLabel::R})
    if (contains(d)) out.push_back(to_char(d));
  return out;
}

DirPath DirPath::parse(std::string_view text) {
  std::vector<DirLabel> labels;
  labels.reserve(text.size());
  for (char c : text) labels.push_back(label_from_char(c));
  return DirPath(std::move(labels));
}

DirPath DirPath::slice(std::size_t i, std::size_t j) const {
  if (i < 1 || j + 1 < i || j > labels_.size())
    throw Error(ErrorCode::PreconditionViolated,
                "subpath P_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range for " +
                    std::to_string(labels_.size()) + " edges");
  return DirPath(std::vector<DirLabel>(labels_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                       labels_.begin() + static_cast<std::ptrdiff_t>(j)));
}

std::string DirPath::to_string() const {
  std::string out;
  out.reserve(labels_.size());
  for (DirLabel d : labels_) out.push_back(to_char(d));
  return out;
}

DirectionSet directions_used(const DirPath& p) {
  DirectionSet set;
  for (DirLabel d : p.labels()) set.insert(d);
  return set;
}

DirPath reverse(const DirPath& p) {
  std::vector<DirLabel> out(p.labels().rbegin(), p.labels().rend());
  for (auto& d : out) d = inverse(d);
  return DirPath(std::move(out));
}

DirPath relabel(const DirPath& p, DirLabel (*map)(DirLabel)) {
  std::vector<DirLabel> out(p.labels().begin(), p.labels().end());
  for (auto& d : out) d = map(d);
  return DirPath(std::move(out));
}

DirPath rotate(const DirPath& p) { return relabel(p, static_cast<DirLabel (*)(DirLabel)>(&rotate)); }
DirPath mirror(const DirPath& p) { return relabel(p, static_cast<DirLabel (*)(DirLabel)>(&mirror)); }

void require_well_formed(const Embedding& e, std::size_t n) {
  if (e.size() != n)
    throw Error(ErrorCode::InvalidEmbedding,
                "embedding has " + std::to_string(e.size()) + " entries, expected " + std::to_string(n));
  std::vector<std::size_t> owner(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = e[k];
    if (p >= n) throw Error(ErrorCode::InvalidEmbedding, "vertex " + std::to_string(k + 1) + " maps outside the set", {k + 1});
    if (owner[p] != n)
      throw Error(ErrorCode::InvalidEmbedding,
                  "vertices " + std::to_string(owner[p] + 1) + " and " + std::to_string(k + 1) + " share point " + std::to_string(p),
                  {owner[p] + 1, k + 1});
    owner[p] = k;
  }
}

Embedding reverse_embedding(const Embedding& e) {
  return Embedding(std::vector<std::size_t>(e.assignment().rbegin(), e.assignment().rend()));
}

std::vector<std::size_t> rotate_index_map(const ConvexPointSet& s) {
  // Rotation keeps the counterclockwise order; the new top is the old right.
  const std::size_t n = s.size();
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = (i + n - s.right()) % n;
  return map;
}

std::vector<std::size_t> mirror_index_map(const ConvexPointSet& s) {
  // Mirroring reverses the cyclic order and keeps the top in front.
  const std::size_t n = s.size();
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = (n - i) % n;
  return map;
}

namespace {

ConvexPointSet transformed(const ConvexPointSet& s, const std::vector<std::size_t>& map, Point (*f)(const Point&)) {
  std::vector<Point> pts(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) pts[map[i]] = f(s[i]);
  return ConvexPointSet::from_hull_order(std::move(pts));
}

Embedding relinked(const Embedding& e, const std::vector<std::size_t>& map) {
  require_well_formed(e, map.size());
  std::vector<std::size_t> out(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out[k] = map[e[k]];
  return Embedding(std::move(out));
}

}  // namespace

ConvexPointSet rotate_set(const ConvexPointSet& s) {
  return transformed(s, rotate_index_map(s), [](const Point& p) { return Point{-p.y, p.x}; });
}

ConvexPointSet mirror_set(const ConvexPointSet& s) {
  return transformed(s, mirror_index_map(s), [](const Point& p) { return Point{-p.x, p.y}; });
}

Embedding rotate_embedding(const Embedding& e, const ConvexPointSet& s) { return relinked(e, rotate_index_map(s)); }

Embedding mirror_embedding(const Embedding& e, const ConvexPointSet& s) { return relinked(e, mirror_index_map(s)); }

}  // namespace pdce
