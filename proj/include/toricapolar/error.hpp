#pragma once

#include <stdexcept>
#include <string>

namespace toricapolar {

enum class ErrorKind {
  // input errors
  ParseError,
  InvalidInput,
  GroupMismatch,
  SideMismatch,
  NonPrimitiveRay,
  NonSimplicialCone,
  TorusFactor,
  NotFullRank,
  NonHomogeneousGenerator,
  NonSquare,
  BadPrime,
  // mathematical refusals
  NoCertificate,
  ContainmentFailed,
  PointInIrrelevantLocus,
  NegativeExponentResidue,
  DegenerateSample,
};

const char* error_name(ErrorKind kind);

// True for refusals that are a property of the mathematics rather than of the input syntax.
bool is_refusal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricapolar
