#include "conlat/error.hpp"

namespace conlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::DuplicateOperation: return "DuplicateOperation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TableEntryOutOfRange: return "TableEntryOutOfRange";
    case ErrorCode::NonTotalTable: return "NonTotalTable";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingMapping: return "MissingMapping";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ReticulationUnavailable: return "ReticulationUnavailable";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::HomeoFailure: return "HomeoFailure";
    case ErrorCode::AnomalyDetected: return "AnomalyDetected";
  }
  return "Unknown";
}

bool is_anomaly(ErrorCode code) {
  return code == ErrorCode::AnomalyDetected || code == ErrorCode::HomeoFailure;
}

}  // namespace conlat
