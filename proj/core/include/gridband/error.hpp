#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridband {

enum class ErrorCode {
  NotAPermutation,
  SquareCollision,
  TooSmall,
  NotAKnot,
  IllegalCommutation,
  NotInterleaved,
  InvalidPosition,
  MultiComponent,
  TooManyCrossings,
  SeedMismatch,
  KeyCollision,
  UnknownName,
  ParseError,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library; `code()` says which
/// contract was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace gridband
