#pragma once

#include <stdexcept>
#include <string>

namespace sturm {

/// Input text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A structurally well-formed value violates a documented precondition
/// (malformed permutation, invalid signature, non-Sturm input, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A permutation fed to the signature reconstruction is not an
/// integrable involution; `clause` names the failed requirement.
class NotIntegrableError : public ValidationError {
public:
    NotIntegrableError(const std::string& message, std::string clause)
        : ValidationError(message), clause_(std::move(clause)) {}
    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

/// An invariant the library guarantees internally was observed broken.
/// Signals a bug in this library, never bad user input.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sturm
