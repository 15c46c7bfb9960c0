#pragma once

#include <stdexcept>
#include <string>

namespace umbra {

// Every failure raised by the library derives from Error, so callers that
// only care about "did it work" can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A degree or order exceeds what a truncated object can represent exactly.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Input is outside the mathematical domain of the operation
// (e.g. building basic polynomials for an operator that is not a delta).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

// Two series built on different lattices or bases were combined.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

class NotImplementedError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A singular recurrence step found a nonzero consistency residual.
class InconsistentRecurrenceError : public Error {
 public:
  using Error::Error;
};

// A point x is not of the form n*h for integer n.
class LatticeMismatchError : public Error {
 public:
  using Error::Error;
};

class UnsupportedMomentError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace umbra
