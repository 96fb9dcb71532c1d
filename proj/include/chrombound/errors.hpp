#pragma once

#include <stdexcept>
#include <string>

namespace chrombound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 text or an unparseable family specifier.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Bad vertex, loop edge, out-of-range family parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Work that would exceed a configured enumeration or brute-force budget.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class DivisibilityError : public Error {
 public:
  using Error::Error;
};

// A memo key was written twice with different values, or an internal
// cross-check failed. Always a bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Graph does not have the chromatic number a check was invoked with.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace chrombound
