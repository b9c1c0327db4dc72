#include "orbit/error.hpp"

namespace orbit {

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotEvenOdd: return "NotEvenOdd";
    case ErrorCode::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorCode::UnsupportedEigenvalues: return "UnsupportedEigenvalues";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::RadicandTooLarge: return "RadicandTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Definite: return "Definite";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::InternalRadicalMismatch: return "InternalRadicalMismatch";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::NotAnnihilated: return "NotAnnihilated";
    case ErrorCode::OddHeightNonzeroParameter: return "OddHeightNonzeroParameter";
    case ErrorCode::ParameterNotSingleton: return "ParameterNotSingleton";
    case ErrorCode::UnderlyingTypeMissing: return "UnderlyingTypeMissing";
    case ErrorCode::InconsistentSignature: return "InconsistentSignature";
    case ErrorCode::NotInLittleAlgebra: return "NotInLittleAlgebra";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::CornerNotZero: return "CornerNotZero";
    case ErrorCode::NotAffineCotype: return "NotAffineCotype";
    case ErrorCode::BijectionMismatch: return "BijectionMismatch";
    case ErrorCode::NoFamilyMatch: return "NoFamilyMatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RoundTripMismatch: return "RoundTripMismatch";
    }
    return "Unknown";
}

ErrorCategory error_category(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotSymmetric:
    case ErrorCode::ParseError:
        return ErrorCategory::Validation;
    case ErrorCode::InternalRadicalMismatch:
    case ErrorCode::ParameterNotSingleton:
    case ErrorCode::UnderlyingTypeMissing:
    case ErrorCode::OddHeightNonzeroParameter:
    case ErrorCode::CornerNotZero:
    case ErrorCode::NoFamilyMatch:
    case ErrorCode::BijectionMismatch:
    case ErrorCode::RoundTripMismatch:
        return ErrorCategory::Internal;
    default:
        return ErrorCategory::Precondition;
    }
}

}  // namespace orbit
