#include "socreval/error.hpp"

namespace socreval {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedRecord: return "MalformedRecord";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::ParadigmMismatch: return "ParadigmMismatch";
        case ErrorCode::RepresentationMismatch: return "RepresentationMismatch";
        case ErrorCode::UnknownDataset: return "UnknownDataset";
        case ErrorCode::UnknownStrategy: return "UnknownStrategy";
        case ErrorCode::BackendUnavailable: return "BackendUnavailable";
        case ErrorCode::MissingTranscript: return "MissingTranscript";
        case ErrorCode::AuthFailure: return "AuthFailure";
        case ErrorCode::NoObjectFound: return "NoObjectFound";
        case ErrorCode::MissingQuality: return "MissingQuality";
        case ErrorCode::QualityOutOfRange: return "QualityOutOfRange";
        case ErrorCode::MalformedObject: return "MalformedObject";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::DegenerateX: return "DegenerateX";
        case ErrorCode::DegenerateSeries: return "DegenerateSeries";
        case ErrorCode::ZeroVariance: return "ZeroVariance";
        case ErrorCode::ConstantVector: return "ConstantVector";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::UnknownClass: return "UnknownClass";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptySteps: return "EmptySteps";
        case ErrorCode::NegativeTokens: return "NegativeTokens";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace socreval
