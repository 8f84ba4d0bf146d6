#pragma once

#include <stdexcept>
#include <string>

namespace redei {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input/validation errors. The CLI maps these to exit code 1.
struct InputError : Error {
    using Error::Error;
};

struct NotPrime : InputError { using InputError::InputError; };
struct ZeroInverse : InputError { using InputError::InputError; };
struct NotADivisor : InputError { using InputError::InputError; };
struct ParamsOutOfRange : InputError { using InputError::InputError; };

struct DivisionByZeroPoly : InputError { using InputError::InputError; };
struct ZeroPolynomial : InputError { using InputError::InputError; };
struct NonMonicDivisor : InputError { using InputError::InputError; };
struct IndexOutOfRange : InputError { using InputError::InputError; };
struct ModulusTooLargeForBivariate : InputError { using InputError::InputError; };

struct EmptySet : InputError { using InputError::InputError; };
struct ZeroInA : InputError { using InputError::InputError; };
struct DuplicatePoint : InputError { using InputError::InputError; };
struct ZeroInput : InputError { using InputError::InputError; };
struct RangeTooLarge : InputError { using InputError::InputError; };
struct BadG : InputError { using InputError::InputError; };
struct BadResidueClass : InputError { using InputError::InputError; };
struct TooFewPoints : InputError { using InputError::InputError; };
struct CollinearInput : InputError { using InputError::InputError; };

// Violations of a claimed bound on inputs that satisfy its hypotheses.
// These are never swallowed: sweeps record them and exit nonzero.
// The CLI maps them to exit code 2.
struct TheoremViolation : Error {
    using Error::Error;
};

struct ExceptionalSetInvalid : TheoremViolation { using TheoremViolation::TheoremViolation; };
struct AllCoefficientsZero : TheoremViolation { using TheoremViolation::TheoremViolation; };
struct MultiplicityDeficit : TheoremViolation { using TheoremViolation::TheoremViolation; };
struct NoPairFound : TheoremViolation { using TheoremViolation::TheoremViolation; };
struct ConstructionFailed : TheoremViolation { using TheoremViolation::TheoremViolation; };

// Resource guard for the pruned clique search.
struct SearchBudgetExceeded : Error { using Error::Error; };

// Report/serialization I/O failures. The CLI maps these to exit code 3.
struct IoError : Error {
    using Error::Error;
};

} // namespace redei
