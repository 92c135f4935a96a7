#pragma once

#include <stdexcept>
#include <string>

namespace picker {

/// Malformed input document or an instance that violates its invariants.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Precondition of an operation does not hold (invalid tour, bad parameters).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A hard size limit of an exact solver or an iteration cap was hit.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace picker
