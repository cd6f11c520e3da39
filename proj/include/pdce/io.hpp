#pragma once

// Instance and embedding files.
//
// Points: one "x y" pair of decimal integers per line (blank lines and lines
// starting with '#' are skipped), or JSON {"points": [[x, y], ...]}.
// Embeddings: one 0-based point index per line, line i for vertex v_{i+1},
// indexing the points in file order.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Detects JSON by a leading '{'. Throws ParseError with the line number.
std::vector<Point> parse_points(std::string_view text);
std::string format_points_text(std::span<const Point> points);
std::string format_points_json(std::span<const Point> points);

std::vector<std::size_t> parse_embedding(std::string_view text);
std::string format_embedding(std::span<const std::size_t> indices);

/// Points as given plus the validated canonical set.
struct Instance {
  std::vector<Point> input;
  ConvexPointSet set;
  std::vector<std::size_t> to_canonical;  // file index -> canonical index
  std::vector<std::size_t> to_input;      // canonical index -> file index

  static Instance from_points(std::vector<Point> input);

  /// Throws InvalidEmbedding for an index outside the file.
  Embedding from_input_order(std::span<const std::size_t> indices) const;
  std::vector<std::size_t> to_input_order(const Embedding& e) const;
};

}  // namespace pdce
