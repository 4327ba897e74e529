#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distchrom {

// Malformed textual input (distance-set grammar, slab files, radicands).
// Carries the byte offset of the offending character where known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A search or state-space budget was exceeded. Distinct from a negative
// verdict: the instance was refused, not decided.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid operation or violated precondition (division by zero, mixed
// radicands, nonpositive inputs, out-of-range coordinates).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace distchrom
