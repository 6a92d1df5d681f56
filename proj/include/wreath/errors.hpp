#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: ring documents, Cayley tables, word syntax.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A ring document parsed but one of the fusion-ring invariants failed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (unit alpha, word not in S, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wreath
