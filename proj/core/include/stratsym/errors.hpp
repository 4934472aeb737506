#pragma once

#include <stdexcept>
#include <string>

namespace stratsym {

enum class ErrorKind {
  UnknownVariable,
  NonpositiveBound,
  GuardViolated,
  ChartMismatch,
  DimensionMismatch,
  JacobiViolation,
  NonHomogeneous,
  DegreeAboveMiddle,
  NoFiberCoordinate,
  CoverGap,
  IdenticalPoints,
  UnknownModel,
  NonFiniteState,
  ParseError,
  InvalidModel,
};

/// Exception carrying a machine-checkable error kind next to the message.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace stratsym
