#pragma once

#include <stdexcept>
#include <string>

namespace monoforge {

// Input is identically zero: both monomials equal and coefficient 1.
class DegenerateZeroError : public std::runtime_error {
public:
    explicit DegenerateZeroError(const std::string& what) : std::runtime_error(what) {}
};

// A blowup chart was requested for a variable outside the center.
class InvalidChartError : public std::logic_error {
public:
    explicit InvalidChartError(const std::string& what) : std::logic_error(what) {}
};

// Binomials of a sequential run live over different variable counts.
class DimensionMismatchError : public std::runtime_error {
public:
    explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

enum class ParseErrorKind {
    Syntax,
    NotABinomial,
    ZeroCoefficient,
};

// Expression-level rejection; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          kind_(kind),
          position_(position) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

}  // namespace monoforge
