#pragma once

#include <stdexcept>
#include <string>

namespace kantorovich {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed object would violate its invariant (metric axioms,
/// shortness, normalization, ...). The message names the offending points.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Arguments live on different spaces, or a map's domain does not line up.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input, or an unresolved reference.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a hard size limit (e.g. the brute-force transport oracle).
class TooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace kantorovich
