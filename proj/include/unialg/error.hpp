#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unialg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different rings (or monomials of different length).
class RingMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (exponent size, basis size, enumeration size) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed text input. `column()` is 1-based within the offending string.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t column)
        : Error(what + " (column " + std::to_string(column) + ")"), column_(column)
    {
    }

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace unialg
