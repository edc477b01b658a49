#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nda {

/// Input text did not conform to one of the mini-language grammars.
/// position() is the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A mapping or operation was applied outside its declared domain.
class DomainError : public std::domain_error {
    using std::domain_error::domain_error;
};

/// coprojector(y) was requested with y < f_T(0): no m satisfies f_T(m) <= y.
class BelowRangeError : public DomainError {
    using DomainError::DomainError;
};

/// Exact evaluation would exceed the configured resource budget
/// (doubly-exponential generators grow past any memory very quickly).
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nda
