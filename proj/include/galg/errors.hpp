#pragma once

#include <stdexcept>
#include <string>

namespace galg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings, or vectors have mismatched lengths.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (syntax, unknown variable, composite modulus, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis required by an operation does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured time or size budget was exhausted.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal certificate failed. Always a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace galg
