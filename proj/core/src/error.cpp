#include "uniflip/error.hpp"

namespace uniflip {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPolynomialQuotient: return "NonPolynomialQuotient";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::UnsupportedType: return "UnsupportedType";
        case ErrorCode::FactorizationFailure: return "FactorizationFailure";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotNormal: return "NotNormal";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::LiftFailure: return "LiftFailure";
        case ErrorCode::NotInStabilizer: return "NotInStabilizer";
        case ErrorCode::AmbiguousLabel: return "AmbiguousLabel";
        case ErrorCode::UnmatchedIrreducible: return "UnmatchedIrreducible";
        case ErrorCode::UnknownLabel: return "UnknownLabel";
        case ErrorCode::NotAPartition: return "NotAPartition";
        case ErrorCode::EmbeddingNotInjective: return "EmbeddingNotInjective";
        case ErrorCode::SpecialNotUnique: return "SpecialNotUnique";
        case ErrorCode::SignTwistNotAFamily: return "SignTwistNotAFamily";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::W0NotCentral: return "W0NotCentral";
        case ErrorCode::MismatchedFamily: return "MismatchedFamily";
        case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
        case ErrorCode::ProductFormMismatch: return "ProductFormMismatch";
        case ErrorCode::DataIntegrity: return "DataIntegrity";
        case ErrorCode::UnknownFilter: return "UnknownFilter";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace uniflip
