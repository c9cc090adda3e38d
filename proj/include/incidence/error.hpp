#pragma once

#include <stdexcept>
#include <string>

namespace incidence {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or document (scalars, field specs, JSON schemas).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition was violated: field or poset mismatch,
/// division by zero, non-invertible input, invalid system, bad order.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace incidence
