#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psl2 {

// Caller violated a precondition (mismatched truncation orders, bad flags).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematical domain violation (log of a series with constant term != 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Request exceeds a documented size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input; carries a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A self-check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace psl2
