#include "lfpscsc/error.hpp"

namespace lfpscsc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::ValueError: return "ValueError";
    case ErrorCode::NonpositiveDenominator: return "NonpositiveDenominator";
    case ErrorCode::InfeasibleRegion: return "InfeasibleRegion";
    case ErrorCode::UnboundedValidation: return "UnboundedValidation";
    case ErrorCode::UnboundedObjective: return "UnboundedObjective";
    case ErrorCode::DegenerateT: return "DegenerateT";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::DegenerateNormalizer: return "DegenerateNormalizer";
    case ErrorCode::PartitionViolation: return "PartitionViolation";
    case ErrorCode::IterationLimit: return "IterationLimit";
  }
  return "Unknown";
}

}  // namespace lfpscsc
