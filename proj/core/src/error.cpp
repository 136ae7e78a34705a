#include "braid2d/error.hpp"

namespace braid2d {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BoundaryNotTrivial: return "BoundaryNotTrivial";
    case ErrorCode::NonSimpleEntry: return "NonSimpleEntry";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::InternalParityViolation: return "InternalParityViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InapplicableMove: return "InapplicableMove";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> entry)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      entry_(entry) {}

}  // namespace braid2d
