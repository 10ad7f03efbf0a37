#pragma once

#include <stdexcept>
#include <string>

namespace qaoaws {

/// Bad caller-provided values: mismatched dimensions, non-unit axes,
/// out-of-range angles, non-finite parameters.
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Refusal to run past the dense / brute-force size ceilings.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input documents (edge lists, JSON tables, config files).
/// Carries a 1-based line number when one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

} // namespace qaoaws
