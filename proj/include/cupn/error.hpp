#pragma once

#include <stdexcept>
#include <string>

namespace cupn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (bad simplex, bad tuple, bad file).
class ValidationError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidTuple : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MalformedPair : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Input is well formed but inconsistent with its context.
class SemanticError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NotInComplex : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class SupportNotInComplex : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class RingMismatch : public SemanticError {
public:
    using SemanticError::SemanticError;
};

class NotACocycle : public Error {
public:
    using Error::Error;
};

}  // namespace cupn
