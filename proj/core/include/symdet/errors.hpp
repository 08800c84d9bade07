#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdet {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed polynomial or matrix text. `position` is a 0-based byte offset
// into the offending input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A variable index exceeds the declared variable count.
class VariableOutOfRange : public Error {
public:
    VariableOutOfRange(int index, int nvars)
        : Error("variable x" + std::to_string(index) + " out of range (s = " +
                std::to_string(nvars) + ")"),
          index_(index), nvars_(nvars) {}

    int index() const noexcept { return index_; }
    int nvars() const noexcept { return nvars_; }

private:
    int index_;
    int nvars_;
};

// Exact polynomial division failed. Inside fraction-free elimination this
// signals an implementation bug, never a valid input, so the offending
// operands are carried for diagnosis.
class DivisionNotExact : public Error {
public:
    DivisionNotExact(const std::string& what, std::string dividend,
                     std::string divisor)
        : Error(what + " [dividend: " + dividend + "] [divisor: " + divisor + "]"),
          dividend_(std::move(dividend)), divisor_(std::move(divisor)) {}

    const std::string& dividend() const noexcept { return dividend_; }
    const std::string& divisor() const noexcept { return divisor_; }

private:
    std::string dividend_;
    std::string divisor_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidRange : public Error {
public:
    using Error::Error;
};

// An operation that enumerates exponentially many subobjects was asked to
// run beyond its configured size guard.
class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Two algorithms produced different determinants for the same matrix during
// a benchmark trial. Always a hard failure.
class ResultMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace symdet
