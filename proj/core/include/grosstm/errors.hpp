#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grosstm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// A result would leave the representable set (base < 1, negative infinite
// exponent part, or a long division that does not terminate).
class UnsupportedResult : public Error {
public:
    explicit UnsupportedResult(const std::string& what) : Error(what) {}
};

class UnsupportedExponent : public Error {
public:
    explicit UnsupportedExponent(const std::string& what) : Error(what) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_ = 0;
};

class InputSymbolOutOfAlphabet : public Error {
public:
    explicit InputSymbolOutOfAlphabet(const std::string& what) : Error(what) {}
};

// Left move at the boundary of a semi-infinite tape.
class BoundaryViolation : public Error {
public:
    explicit BoundaryViolation(const std::string& what) : Error(what) {}
};

class UnknownCompositeSymbol : public Error {
public:
    explicit UnknownCompositeSymbol(const std::string& what) : Error(what) {}
};

}  // namespace grosstm
