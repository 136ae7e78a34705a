#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braid2d {

enum class ErrorCode {
  DegreeMismatch,
  RankMismatch,
  IndexOutOfRange,
  BoundaryNotTrivial,
  NonSimpleEntry,
  PositionOutOfRange,
  InternalParityViolation,
  BudgetExceeded,
  InapplicableMove,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type. `entry`
// carries the zero-based tuple entry (or trace position) the error refers to.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> entry = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> entry() const noexcept { return entry_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> entry_;
};

}  // namespace braid2d
