#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wstrass {

/// A mathematical precondition was violated (bad curve, point off the curve, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive series precision ran into its hard cap before an answer was certified.
class PrecisionExhausted : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed polynomial expression. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace wstrass
