#pragma once

#include <stdexcept>
#include <string>

namespace semanc {

// Error in the textual input (KB/program source, CLI file formats).
// Carries a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Violated operation precondition (mismatched universes, state space too
// large, unsatisfiable KB where a model is required, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace semanc
