#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdce {

enum class ErrorCode {
  EmptyInput,
  CoordinateOutOfRange,
  DuplicateX,
  DuplicateY,
  CollinearTriple,
  NotConvexPosition,
  PreconditionViolated,
  SizeMismatch,
  FourDirectional,
  InvalidEmbedding,
  InternalCaseError,
  GenerationFailed,
  BoundExceeded,
  NotFoundWithinBudget,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every operation in the library. `indices` names the
/// offending input positions where that makes sense (points for validation
/// errors, vertices or edges for embedding errors).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace pdce
