#include "strandalg/error.hpp"

namespace strandalg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadSize: return "BadSize";
        case ErrorCode::NotTwoToOne: return "NotTwoToOne";
        case ErrorCode::SurgeryDisconnected: return "SurgeryDisconnected";
        case ErrorCode::InvalidDiagram: return "InvalidDiagram";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::InvalidChord: return "InvalidChord";
        case ErrorCode::InconsistentChords: return "InconsistentChords";
        case ErrorCode::InconsistentResult: return "InconsistentResult";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::EpsilonViolation: return "EpsilonViolation";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::InvalidDomain: return "InvalidDomain";
        case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
        case ErrorCode::NonIntegralIndex: return "NonIntegralIndex";
        case ErrorCode::BoundaryNonzero: return "BoundaryNonzero";
        case ErrorCode::NotAResolution: return "NotAResolution";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace strandalg
