#pragma once

#include <stdexcept>
#include <string>

namespace cyccover {

// Base of all library errors. Two families matter for CLI exit codes:
// precondition/parse failures exit with 2, budget overruns with 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// gf
struct NonPrime : PreconditionError { using PreconditionError::PreconditionError; };
struct DegreeZero : PreconditionError { using PreconditionError::PreconditionError; };
struct FieldMismatch : PreconditionError { using PreconditionError::PreconditionError; };
struct DivisionByZero : PreconditionError { using PreconditionError::PreconditionError; };
struct ZeroElement : PreconditionError { using PreconditionError::PreconditionError; };

// polyring
struct DivisorZero : PreconditionError { using PreconditionError::PreconditionError; };

// cyclo
struct NotCoprime : PreconditionError { using PreconditionError::PreconditionError; };
// Coefficient of a minimal polynomial escaped the base field: an internal bug,
// not a user error.
struct CoefficientEscape : std::logic_error { using std::logic_error::logic_error; };

// linalg
struct DimensionMismatch : PreconditionError { using PreconditionError::PreconditionError; };
struct NotDirect : PreconditionError { using PreconditionError::PreconditionError; };

// cover
struct NotCovering : PreconditionError { using PreconditionError::PreconditionError; };

// construct
struct BadN : PreconditionError { using PreconditionError::PreconditionError; };
struct BadDivisor : PreconditionError { using PreconditionError::PreconditionError; };
struct PreconditionC : PreconditionError { using PreconditionError::PreconditionError; };
struct PreconditionGcd : PreconditionError { using PreconditionError::PreconditionError; };

// groups
struct NotInvertible : PreconditionError { using PreconditionError::PreconditionError; };
struct CapExceeded : BudgetExceeded { using BudgetExceeded::BudgetExceeded; };
struct CharDivides : PreconditionError { using PreconditionError::PreconditionError; };
struct NotInvariant : PreconditionError { using PreconditionError::PreconditionError; };
struct NotDecomposition : PreconditionError { using PreconditionError::PreconditionError; };

// serialization
struct ParseError : PreconditionError { using PreconditionError::PreconditionError; };

}  // namespace cyccover
