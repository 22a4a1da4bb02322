#pragma once

#include <stdexcept>

namespace idealmv {

/// Malformed textual input: ring specs, suite ids, CLI operands.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands that belong to different rings.
class SpecMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input beyond a supported size bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A structural precondition does not hold, e.g. a table that is required
/// to be an MV-algebra fails the mv suite.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace idealmv
