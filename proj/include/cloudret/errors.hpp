#pragma once

#include <stdexcept>
#include <string>

namespace cloudret {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shapes do not conform (and cannot be broadcast).
struct ShapeError : Error {
    using Error::Error;
};

// Invalid configuration detected before any work is done.
struct ConfigError : Error {
    using Error::Error;
};

// An API precondition was violated (e.g. backward on a non-scalar).
struct ContractError : Error {
    using Error::Error;
};

// Inputs outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Non-finite values where finiteness is guaranteed (NaN abort in training).
struct NumericError : Error {
    using Error::Error;
};

// File I/O failures, with distinct kinds for checkpoint/profile loading.
struct IoError : Error {
    using Error::Error;
};
struct MagicError : IoError {
    using IoError::IoError;
};
struct VersionError : IoError {
    using IoError::IoError;
};
struct TruncatedError : IoError {
    using IoError::IoError;
};
struct ShapeMismatchError : IoError {
    using IoError::IoError;
};

}  // namespace cloudret
