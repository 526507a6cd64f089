#pragma once

#include <stdexcept>
#include <string>

namespace pex {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric argument is outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

// A Best-1-Arm instance has two arms sharing the maximum mean.
struct TiedBest : DomainError {
    using DomainError::DomainError;
};

// An operation was handed an empty arm set.
struct EmptySet : DomainError {
    using DomainError::DomainError;
};

// Parameter combination violates a procedure's preconditions.
struct InvalidParams : DomainError {
    using DomainError::DomainError;
};

// Instance-generator spec is infeasible (e.g. odd m, too few arms).
struct SpecError : DomainError {
    using DomainError::DomainError;
};

// An unbounded loop hit its configured safety cap.
struct RoundLimitExceeded : Error {
    using Error::Error;
};

// A reference-sequence search exhausted its halving budget.
struct SearchBudgetExceeded : Error {
    using Error::Error;
};

// The parallel-simulation wrapper spawned more inner instances than allowed.
struct InstanceBudgetExceeded : Error {
    using Error::Error;
};

// Bad harness/CLI configuration (maps to exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// File read/write failure (maps to exit code 3).
struct IoError : Error {
    using Error::Error;
};

}  // namespace pex
