#pragma once

#include <stdexcept>
#include <string>

namespace akdefect {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (multipartition / multicharge grammar, number lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested specialisation sends a Schur element to zero.
class BadSpecialisation : public Error {
 public:
  using Error::Error;
};

// Division in the Laurent ring left a nonzero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

}  // namespace akdefect
