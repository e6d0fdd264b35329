#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dycklat {

enum class ErrorKind {
  MalformedPath,
  BadCharacter,
  EmptyPath,
  NotInFamily,
  InvalidFamily,
  LengthMismatch,
  SizeGuard,
  InvalidInterval,
  EmptyInterval,
  PatternViolation,
  QuarterPlaneViolation,
  IllegalInsertion,
  InvalidWord,
  InvalidComposition,
  InvalidSubset,
  TotalMismatch,
  AmbientMismatch,
  NonUnitDenominator,
  BadConstantTerm,
  NonIntegral,
  PrecisionExceeded,
  BadRecord,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dycklat
