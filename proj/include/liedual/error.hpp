#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liedual {

enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  JacobiViolation,
  NotAnIdeal,
  NotASubalgebra,
  InvalidData,
  NotACocycle,
  NotADerivation,
  DegenerateForm,
  StructureInvalid,
  DecompositionFailed,
  NotReductive,
  InvalidSpec,
  ParseError,
  AntisymmetryOrdering,
  LimitExceeded,
  UnknownCommand,
  Usage,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this exception. The
/// optional location is a JSON pointer, a "line:column" pair, or an index
/// triple, depending on where the failure was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {})
      : std::runtime_error(message), code_(code), location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace liedual
