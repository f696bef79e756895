#include "toricapolar/error.hpp"

namespace toricapolar {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::NonSimplicialCone: return "NonSimplicialCone";
    case ErrorKind::TorusFactor: return "TorusFactor";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::ContainmentFailed: return "ContainmentFailed";
    case ErrorKind::PointInIrrelevantLocus: return "PointInIrrelevantLocus";
    case ErrorKind::NegativeExponentResidue: return "NegativeExponentResidue";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
  }
  return "Unknown";
}

bool is_refusal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoCertificate:
    case ErrorKind::ContainmentFailed:
    case ErrorKind::PointInIrrelevantLocus:
    case ErrorKind::NegativeExponentResidue:
    case ErrorKind::DegenerateSample:
      return true;
    default:
      return false;
  }
}

}  // namespace toricapolar
