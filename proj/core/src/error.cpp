#include "gridband/error.hpp"

namespace gridband {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::NotAPermutation: return "NotAPermutation";
  case ErrorCode::SquareCollision: return "SquareCollision";
  case ErrorCode::TooSmall: return "TooSmall";
  case ErrorCode::NotAKnot: return "NotAKnot";
  case ErrorCode::IllegalCommutation: return "IllegalCommutation";
  case ErrorCode::NotInterleaved: return "NotInterleaved";
  case ErrorCode::InvalidPosition: return "InvalidPosition";
  case ErrorCode::MultiComponent: return "MultiComponent";
  case ErrorCode::TooManyCrossings: return "TooManyCrossings";
  case ErrorCode::SeedMismatch: return "SeedMismatch";
  case ErrorCode::KeyCollision: return "KeyCollision";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

} // namespace gridband
