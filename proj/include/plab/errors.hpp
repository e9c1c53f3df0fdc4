#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live over different variable counts / dimensions.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Exponent arithmetic left the fixed-width integer range.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Bad expression text; `position` is a 0-based offset into the source.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Malformed or inconsistent structure-definition input.
class StructureError : public Error {
public:
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

} // namespace plab
