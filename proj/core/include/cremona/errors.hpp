#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated domain (zero polynomial,
/// dimension mismatch, shape test failed where the shape is required, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

/// The structural hypothesis of the leading-term prediction does not hold
/// for the given polynomial.  Distinct from precondition_error so callers
/// can tell "map has the wrong shape" apart from "polynomial is too
/// degenerate to predict".
class hypothesis_error : public error {
public:
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

/// Text input did not conform to the expression or map-file grammar.
class parse_error : public error {
public:
    parse_error(const std::string& message, int line, int column)
        : error(message + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          message_(message), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

}  // namespace cremona
