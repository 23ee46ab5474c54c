#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments that violate an operation's contract (bad ids, wrong arity, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Structural hypothesis on the instance does not hold (e.g. not d-path-dominant).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public InvalidInput {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ", column " +
                       std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace kdp
