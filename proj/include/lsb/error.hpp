#pragma once

#include <stdexcept>
#include <string>

namespace lsb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed sequence, alphabet, spec or argument.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A size guard refused the request (enumeration too large, code space overflow).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition that cannot be checked by types alone was violated.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Random pair generation gave up after its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// An experiment produced a sharing frequency the construction rules out.
class RailViolation : public Error {
public:
    using Error::Error;
};

}  // namespace lsb
