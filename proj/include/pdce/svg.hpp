#pragma once

#include <string>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce {

/// SVG drawing of an embedding: faint hull, one arrow per edge coloured by its
/// label, numbered vertices. Output depends only on the inputs. Throws
/// InvalidEmbedding when E is not a PDCE of P on S, unless `force` is set.
std::string render_svg(const ConvexPointSet& s, const Embedding& e, const DirPath& p, bool force = false);

}  // namespace pdce
