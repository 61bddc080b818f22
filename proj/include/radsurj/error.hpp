#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radsurj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different variable tables.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation (zero polynomial,
/// multivariate input to a univariate routine, missing variable...).
class DomainError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The requested oracle or shortcut does not cover this instance.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Bad user input: malformed files, zero denominators, invalid towers.
class InputError : public Error {
public:
    using Error::Error;
};

class TowerError : public InputError {
public:
    enum class Kind { order, non_reduced_radicand, exponent, constant_radicand };

    TowerError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A computation exceeded its configured budget (Buchberger step limit).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Floating point iteration failed to converge.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace radsurj
