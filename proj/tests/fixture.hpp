#pragma once

#include <json.hpp>
#include <string>

#include "pdce/geometry.hpp"
#include "pdce/io.hpp"
#include "pdce/paths.hpp"

namespace pdce::testing {

struct Fixture {
  DirPath path;
  ConvexPointSet set;
  std::size_t planar_candidates;
  std::size_t pdce_count;
  std::string certificate_sha256;
};

inline std::string fixture_path() { return std::string(PDCE_SOURCE_DIR) + "/data/counterexample.json"; }

inline Fixture load_fixture() {
  const auto doc = nlohmann::json::parse(read_text_file(fixture_path()));
  return Fixture{DirPath::parse(doc.at("path").get<std::string>()),
                 validate(parse_points(read_text_file(fixture_path()))),
                 doc.at("planar_candidates").get<std::size_t>(), doc.at("pdce_count").get<std::size_t>(),
                 doc.at("certificate_sha256").get<std::string>()};
}

}  // namespace pdce::testing
