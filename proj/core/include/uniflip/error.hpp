#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniflip {

/// Failure categories raised by the library. The CLI maps these to exit codes.
enum class ErrorCode {
    NonPolynomialQuotient,
    ZeroConstantTerm,
    UnsupportedType,
    FactorizationFailure,
    NotClosed,
    NotNormal,
    TooLarge,
    LiftFailure,
    NotInStabilizer,
    AmbiguousLabel,
    UnmatchedIrreducible,
    UnknownLabel,
    NotAPartition,
    EmbeddingNotInjective,
    SpecialNotUnique,
    SignTwistNotAFamily,
    NoSolution,
    W0NotCentral,
    MismatchedFamily,
    NonIntegralDegree,
    ProductFormMismatch,
    DataIntegrity,
    UnknownFilter,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace uniflip
