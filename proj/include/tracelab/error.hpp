#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracelab {

enum class ErrorKind {
  FieldMismatch,
  DimensionMismatch,
  InvalidField,
  MissingIdempotents,
  AlgebraMismatch,
  CompositionMismatch,
  NotIdempotent,
  NotProjective,
  ShapeMismatch,
  HopfMismatch,
  AntipodeNotInvertible,
  IntegralNotFound,
  NotPivotal,
  NotSymmetric,
  Degenerate,
  NotUnimodular,
  DegenerateGram,
  ParseError,
  ValidationError,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tracelab
