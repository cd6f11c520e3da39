#include "pdce/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "pdce/error.hpp"
#include "pdce/validator.hpp"

namespace pdce {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 40.0;

const char* colour(DirLabel d) {
  switch (d) {
    case DirLabel::U: return "#1f77b4";
    case DirLabel::D: return "#d62728";
    case DirLabel::L: return "#2ca02c";
    case DirLabel::R: return "#ff7f0e";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const ConvexPointSet& s, const Embedding& e, const DirPath& p, bool force) {
  if (p.vertex_count() != s.size())
    throw Error(ErrorCode::SizeMismatch,
                "path has " + std::to_string(p.vertex_count()) + " vertices, set has " + std::to_string(s.size()) + " points");
  require_well_formed(e, s.size());
  if (!force) {
    const ValidationReport report = validate_embedding(p, s, e);
    if (!report.is_pdce()) {
      const Violation v = *report.first_violation;
      throw Error(ErrorCode::InvalidEmbedding,
                  std::string("not a PDCE (") + to_string(v.kind) + " violation at " + std::to_string(v.index) +
                      "); use --force to draw it anyway",
                  {v.index});
    }
  }

  std::int64_t min_x = s[0].x, max_x = s[0].x, min_y = s[0].y, max_y = s[0].y;
  for (const Point& q : s.points()) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }
  const double span = static_cast<double>(std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kCanvas - 2 * kMargin) / span;
  auto sx = [&](const Point& q) { return kMargin + static_cast<double>(q.x - min_x) * scale; };
  auto sy = [&](const Point& q) { return kCanvas - kMargin - static_cast<double>(q.y - min_y) * scale; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  out << "<defs>\n";
  for (DirLabel d : {DirLabel::U, DirLabel::D, DirLabel::L, DirLabel::R})
    out << "<marker id=\"arrow-" << to_char(d)
        << "\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" orient=\"auto\">"
        << "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << colour(d) << "\"/></marker>\n";
  out << "</defs>\n";

  out << "<polygon class=\"hull\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\" points=\"";
  for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << sx(s[k]) << ',' << sy(s[k]);
  out << "\"/>\n";

  for (std::size_t i = 1; i < s.size(); ++i) {
    const Point& a = s[e.vertex(i)];
    const Point& b = s[e.vertex(i + 1)];
    const DirLabel d = p.label(i);
    out << "<line class=\"edge\" data-label=\"" << to_char(d) << "\" x1=\"" << sx(a) << "\" y1=\"" << sy(a)
        << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b) << "\" stroke=\"" << colour(d)
        << "\" stroke-width=\"2\" marker-end=\"url(#arrow-" << to_char(d) << ")\"/>\n";
  }

  for (std::size_t i = 1; i <= s.size(); ++i) {
    const Point& q = s[e.vertex(i)];
    out << "<circle class=\"node\" cx=\"" << sx(q) << "\" cy=\"" << sy(q)
        << "\" r=\"6\" fill=\"#ffffff\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << sx(q) + 8 << "\" y=\"" << sy(q) - 8 << "\" font-family=\"sans-serif\" font-size=\"12\">v"
        << i << " (" << q.x << ", " << q.y << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pdce
