#include "dycklat/error.hpp"

namespace dycklat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedPath: return "MalformedPath";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::EmptyPath: return "EmptyPath";
    case ErrorKind::NotInFamily: return "NotInFamily";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::QuarterPlaneViolation: return "QuarterPlaneViolation";
    case ErrorKind::IllegalInsertion: return "IllegalInsertion";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidComposition: return "InvalidComposition";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::TotalMismatch: return "TotalMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::BadRecord: return "BadRecord";
  }
  return "Unknown";
}

}  // namespace dycklat
