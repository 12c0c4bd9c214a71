#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

/// Input text could not be parsed. `position` is a 0-based byte offset into
/// the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operation was invoked outside its documented domain.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient beyond the stored degree bound was requested; the value
/// would be unreliable.
class DegreeOverflowError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An internal consistency check failed (for example a generator matrix
/// that is not unimodular). Signals a convention bug, not bad user input.
class InternalInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A link-level comparison was attempted outside the hypothesis under which
/// it is decidable; `sequence` is the offending index sequence.
class HypothesisViolationError : public std::runtime_error {
public:
    HypothesisViolationError(const std::string& message, std::vector<int> sequence)
        : std::runtime_error(message), sequence_(std::move(sequence)) {}

    const std::vector<int>& sequence() const { return sequence_; }

private:
    std::vector<int> sequence_;
};

}  // namespace milnor
