#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbit {

/// Failure categories. The CLI maps them to exit codes 2, 3 and 4.
enum class ErrorCategory {
    Validation,    // malformed input, bad shapes, unparsable labels
    Precondition,  // mathematically invalid input (not isotropic, ...)
    Internal,      // a theorem-backed assertion failed
};

enum class ErrorCode {
    // scalars
    DivisionByZero,
    NotEvenOdd,
    FactorizationIncomplete,
    UnsupportedEigenvalues,
    NotRational,
    RadicandTooLarge,
    // linalg
    ShapeMismatch,
    Singular,
    Inconsistent,
    NotAFactor,
    // formspace
    Degenerate,
    DegenerateRestriction,
    NotIsotropic,
    ZeroVector,
    Definite,
    NotSymmetric,
    // typeclass
    NotNilpotent,
    NotInAlgebra,
    InternalRadicalMismatch,
    Unrealizable,
    // adjoint
    NotAnnihilated,
    OddHeightNonzeroParameter,
    ParameterNotSingleton,
    UnderlyingTypeMissing,
    InconsistentSignature,
    NotInLittleAlgebra,
    NotInGroup,
    // coadjoint
    CornerNotZero,
    NotAffineCotype,
    BijectionMismatch,
    // poincare
    NoFamilyMatch,
    // io
    ParseError,
    RoundTripMismatch,
};

std::string_view error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return error_category(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail)
{
    throw Error(code, detail);
}

}  // namespace orbit
