#pragma once

#include <stdexcept>
#include <string>

namespace resgraph {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or domain invariant was violated (CLI exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON, bad rational syntax, unknown id (exit code 1).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// User-supplied analytic data contradicts a formula (exit code 3).
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration bound was too small to decide the question (exit code 4).
class OracleBoundError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. This never fires on correct code: it
/// signals a bug in the library, not bad input.
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace resgraph
