#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pdce/geometry.hpp"
#include "pdce/paths.hpp"

namespace pdce::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Results go to
/// `out`; failures print one line to `err` and return kUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// JSON fixture for a set on which `p` has no PDCE: path, canonical points,
/// candidate and PDCE counts, certificate hash.
std::string counterexample_fixture(const DirPath& p, const ConvexPointSet& s);

}  // namespace pdce::cli
