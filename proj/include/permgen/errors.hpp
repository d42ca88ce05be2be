#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permgen {

enum class ErrorKind {
  SyntaxError,
  PointOutOfRange,
  RepeatedPointInCycle,
  DegreeMismatch,
  SeedNotInGroup,
  LayerNotElementaryAbelian,
  LayerNotNormal,
  RefinementFailed,
  IndexOutOfRange,
  ExhaustiveCapExceeded,
  InternalInconsistency,
  CapExceeded,
  NotFoundWithin,
  FileNotFound,
  BadGenerators,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 0-based character offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace permgen
