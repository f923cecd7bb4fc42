#pragma once

#include <stdexcept>
#include <string>

namespace tokens {

// Raised when a computation finishes but its result fails a hard internal
// check; callers can distinguish "the math said no" from bad usage
// (std::invalid_argument) and environment trouble (std::runtime_error).
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver did not reach its off-diagonal target within the sweep budget.
struct ConvergenceError : CheckFailure {
    using CheckFailure::CheckFailure;
};

// An eigenspace that should be invariant under a restricted operator is not;
// certificates must never be emitted past this point.
struct InvarianceError : CheckFailure {
    using CheckFailure::CheckFailure;
};

// A requested construction would exceed the configured size guard.
struct GuardExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive search completed without finding a match.
struct NoMatchError : CheckFailure {
    using CheckFailure::CheckFailure;
};

}  // namespace tokens
