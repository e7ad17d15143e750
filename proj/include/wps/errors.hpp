#pragma once

#include <stdexcept>
#include <string>

namespace wps {

// Malformed text/JSON input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Shape/degree mismatches: wrong lengths, inhomogeneous entries, bad dimensions.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& m) : std::runtime_error(m) {}
};

// Precondition violations on mathematical domain (non-divisible weights, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// A configured resource budget was exceeded. Never a silent wrong answer.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

// Two routes that must agree disagreed; indicates an internal bug.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace wps
