#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuzztop {

// Structural error codes. Law failures are not errors; they travel in
// CheckReport entries so callers can render witnesses.
enum class Errc {
  NotAPartialOrder,
  NotALattice,
  NotDistributive,
  DegenerateLattice,
  UnknownCatalogName,
  ChainTooShort,
  ReflexivityFail,
  SymmetryFail,
  TransitivityFail,
  CarrierMismatch,
  EmptySubset,
  MonoidMismatch,
  DimensionMismatch,
  CodomainMismatch,
  NotInjective,
  ParentMismatch,
  NotCrispRepresentable,
  RawViolates1ff,
  RawViolates2ff,
  RawViolates3ff,
  NotTopSurjective,
  ImageEqualityInvalid,
  EmptyFamily,
  CarrierTooLarge,
  ExplosionCap,
  NonExtensionalSubbase,
  BaseDoesNotGenerate,
  MuNotTop,
  NotMVAlgebra,
  NotContinuous,
  NotSurjective,
  BudgetExceeded,
  BoundsTooLarge,
  SyntaxError,
  UnknownReference,
  ValueNotInCarrier,
  ValidationFailure,
  UnknownCommand,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<std::string> witness = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<std::string> witness_;
};

}  // namespace fuzztop
