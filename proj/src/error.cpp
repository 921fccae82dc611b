#include "oitkit/error.hpp"

namespace oit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModel: return "invalid-model";
    case ErrorKind::NotRestorable: return "not-restorable";
    case ErrorKind::UnknownIndex: return "unknown-index";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::ChainMismatch: return "chain-mismatch";
    case ErrorKind::MissingMeasure: return "missing-measure";
    case ErrorKind::PartialRelation: return "partial-relation";
    case ErrorKind::InvalidRelation: return "invalid-relation";
    case ErrorKind::GapOverlap: return "gap-overlap";
    case ErrorKind::EmptyGap: return "empty-gap";
    case ErrorKind::EmptyStates: return "empty-states";
    case ErrorKind::MissingCopies: return "missing-copies";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NonNormalized: return "non-normalized";
    case ErrorKind::NegativeProbability: return "negative-probability";
    case ErrorKind::NonPositiveInput: return "nonpositive-input";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::InvalidN: return "invalid-n";
    case ErrorKind::EmptyCandidates: return "empty-candidates";
    case ErrorKind::SingularInnovation: return "singular-innovation";
    case ErrorKind::MissingQuantumCount: return "missing-quantum-count";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace oit
