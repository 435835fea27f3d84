#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsw {

// Root of every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by a caller-supplied argument.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed CSV input. Row and column are 1-based; column 0 means "whole row".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t column)
        : Error(what), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class UnequalSupportError : public Error {
public:
    using Error::Error;
};

// The monomial feature dimension q exceeded the configured cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::uint64_t q)
        : Error(what), q_(q) {}

    std::uint64_t q() const noexcept { return q_; }

private:
    std::uint64_t q_;
};

class LayerCountError : public Error {
public:
    using Error::Error;
};

class InsufficientSamplesError : public Error {
public:
    using Error::Error;
};

class DegenerateFitError : public Error {
public:
    using Error::Error;
};

}  // namespace gsw
