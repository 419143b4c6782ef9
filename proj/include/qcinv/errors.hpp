#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcinv {

// Malformed braid/block text. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold for the given input
// (e.g. the full-twist power does not act trivially, or a candidate
// coloring is not fixed by the braid action).
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qcinv
