#include "pdce/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pdce/error.hpp"

namespace pdce {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::vector<T> parse_lines(std::string_view text, std::size_t per_line, const char* what) {
  std::vector<T> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t fields = 0;
    while (!line.empty()) {
      T v{};
      const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
      if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
        throw Error(ErrorCode::ParseError, std::string("line ") + std::to_string(line_no) + ": expected " + what);
      values.push_back(v);
      ++fields;
      line = trim(line.substr(static_cast<std::size_t>(ptr - line.data())));
    }
    if (fields != per_line)
      throw Error(ErrorCode::ParseError, std::string("line ") + std::to_string(line_no) + ": expected " + what);
  }
  return values;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Error(ErrorCode::ParseError, "cannot write " + path);
}

std::vector<Point> parse_points(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  std::vector<Point> points;
  if (start != std::string_view::npos && text[start] == '{') {
    try {
      const auto doc = nlohmann::json::parse(text);
      for (const auto& pair : doc.at("points")) {
        if (!pair.is_array() || pair.size() != 2) throw Error(ErrorCode::ParseError, "points must be [x, y] pairs");
        points.push_back(Point{pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("bad JSON instance: ") + e.what());
    }
  } else {
    const auto values = parse_lines<std::int64_t>(text, 2, "two integers \"x y\"");
    for (std::size_t k = 0; k < values.size(); k += 2) points.push_back(Point{values[k], values[k + 1]});
  }
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points in input");
  return points;
}

std::string format_points_text(std::span<const Point> points) {
  std::ostringstream out;
  for (const Point& p : points) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

std::string format_points_json(std::span<const Point> points) {
  nlohmann::json doc;
  doc["points"] = nlohmann::json::array();
  for (const Point& p : points) doc["points"].push_back({p.x, p.y});
  return doc.dump() + "\n";
}

std::vector<std::size_t> parse_embedding(std::string_view text) {
  return parse_lines<std::size_t>(text, 1, "one point index");
}

std::string format_embedding(std::span<const std::size_t> indices) {
  std::ostringstream out;
  for (std::size_t q : indices) out << q << '\n';
  return out.str();
}

Instance Instance::from_points(std::vector<Point> input) {
  ConvexPointSet set = validate(input);
  std::vector<std::size_t> to_canonical(input.size());
  std::vector<std::size_t> to_input(input.size());
  for (std::size_t k = 0; k < input.size(); ++k) {
    to_canonical[k] = set.index_of(input[k]);
    to_input[to_canonical[k]] = k;
  }
  return Instance{std::move(input), std::move(set), std::move(to_canonical), std::move(to_input)};
}

Embedding Instance::from_input_order(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> out(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= to_canonical.size())
      throw Error(ErrorCode::InvalidEmbedding, "vertex " + std::to_string(k + 1) + " maps outside the set", {k + 1});
    out[k] = to_canonical[indices[k]];
  }
  return Embedding(std::move(out));
}

std::vector<std::size_t> Instance::to_input_order(const Embedding& e) const {
  std::vector<std::size_t> out(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) out[k] = to_input[e[k]];
  return out;
}

}  // namespace pdce
