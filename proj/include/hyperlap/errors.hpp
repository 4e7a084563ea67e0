#pragma once

#include <stdexcept>
#include <string>

namespace hyperlap {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected user-provided data (unknown vertex, empty hyperedge, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed file content.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Invalid argument to an operation (out-of-range dimension, bad grid, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Id/label does not resolve to anything.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Structural precondition violated (e.g. complex not closed under faces).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Numerical failure (non-convergence, degenerate network, step-cap hit).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace hyperlap
