#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace advshare {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something malformed: mismatched dimensions, a bad modulus,
// an unparsable file, a non-commuting generator set.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// An exhaustive search or dense simulation would exceed its configured cap.
// Raised instead of returning an approximate answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NotCommutative : public InvalidArgument {
public:
    NotCommutative(std::size_t row_a, std::size_t row_b)
        : InvalidArgument("not commutative: generator rows " + std::to_string(row_a + 1) + " and " +
                          std::to_string(row_b + 1) + " have nonzero symplectic product"),
          row_a_(row_a),
          row_b_(row_b) {}

    // 0-based row indices of the first offending pair.
    std::size_t row_a() const noexcept { return row_a_; }
    std::size_t row_b() const noexcept { return row_b_; }

private:
    std::size_t row_a_;
    std::size_t row_b_;
};

class DependentRows : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotAdvanceShareable : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class GramMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class UncorrectableErasure : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public InvalidArgument {
public:
    ParseError(std::size_t line, const std::string& what)
        : InvalidArgument("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace advshare
