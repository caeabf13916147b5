#include "chordatlas/error.hpp"

namespace chordatlas {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::GapInSupport: return "GapInSupport";
    case ErrorCode::ReversedPair: return "ReversedPair";
    case ErrorCode::IntervalOutOfRange: return "IntervalOutOfRange";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::SizeOne: return "SizeOne";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::RootNotFixed: return "RootNotFixed";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::CornerOutOfRange: return "CornerOutOfRange";
    case ErrorCode::NotBridgeless: return "NotBridgeless";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TruncationTooTight: return "TruncationTooTight";
    case ErrorCode::BadMultiset: return "BadMultiset";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace chordatlas
