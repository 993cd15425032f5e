#pragma once

#include <stdexcept>
#include <string>

namespace econ {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// CSV schema problems: missing columns, bad header.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Row-level ingestion problems: unparseable cells, duplicate years, gaps.
class IngestionError : public Error {
public:
    using Error::Error;
};

/// Mathematical domain violations (log of nonpositive value, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Too few observations for the requested operation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Rank-deficient design matrix or otherwise degenerate regression.
class SingularDesignError : public Error {
public:
    using Error::Error;
};

/// Numerical degeneracy in matrix decompositions.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Invalid argument combinations (cause == effect, rank out of range, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// I/O failures.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace econ
