#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolforget {

// Lexical or syntactic error in any of the text formats. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Evaluation reached a variable the assignment does not cover.
class EvalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A saturation or forgetting run exceeded the configured size cap.
class ResourceCapError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its stated precondition.
class PreconditionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// File-level input problems (unknown extension, unreadable path).
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace boolforget
