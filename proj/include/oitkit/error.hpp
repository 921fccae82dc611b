#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oit {

enum class ErrorKind {
  InvalidModel,
  NotRestorable,
  UnknownIndex,
  Overlap,
  ChainMismatch,
  MissingMeasure,
  PartialRelation,
  InvalidRelation,
  GapOverlap,
  EmptyGap,
  EmptyStates,
  MissingCopies,
  DimensionMismatch,
  NonNormalized,
  NegativeProbability,
  NonPositiveInput,
  EmptyInput,
  InvalidN,
  EmptyCandidates,
  SingularInnovation,
  MissingQuantumCount,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Domain failure raised by library operations. The message names the
// violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oit
