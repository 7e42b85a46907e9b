#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfpscsc {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DimensionError,
  ValueError,
  NonpositiveDenominator,
  InfeasibleRegion,
  UnboundedValidation,
  UnboundedObjective,
  DegenerateT,
  EmptyPolyhedron,
  DegenerateNormalizer,
  PartitionViolation,
  IterationLimit,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lfpscsc
