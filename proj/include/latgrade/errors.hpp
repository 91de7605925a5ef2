#pragma once

#include <stdexcept>
#include <string>

namespace latgrade {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (ambient ranks, vector lengths).
struct DimensionError : Error {
    using Error::Error;
};

/// A mathematical precondition failed, e.g. a pair that is not a specialization.
struct PreconditionError : Error {
    using Error::Error;
};

/// An enumeration budget or time limit was hit before the answer was certified.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace latgrade
