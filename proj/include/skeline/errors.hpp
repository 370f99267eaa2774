#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeline {

/// Malformed or truncated image data. `offset` is the byte position at which
/// decoding gave up.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by automatic thresholding when the histogram has a single occupied bin.
class DegenerateHistogramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reference to a node or edge that does not exist (or is no longer live).
class InvalidReferenceError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A precondition between pipeline stages was violated by the caller.
class ContractViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A postcondition the algorithm guarantees did not hold. Signals a bug.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Result document could not be parsed back.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace skeline
