#pragma once

#include <stdexcept>
#include <string>

namespace candy {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1, except TheoremViolation which maps to 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A call violated an operation's precondition (index out of range, a child
// asked to share with fewer than two candies, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CycleNotFound : public Error {
 public:
  using Error::Error;
};

class NotPeriodic : public Error {
 public:
  using Error::Error;
};

class NotBalanced : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class MissingPrefix : public Error {
 public:
  using Error::Error;
};

// Raised when a computed result contradicts one of the proven theorems.
// Never expected in practice; kept distinct so callers can tell "bad input"
// from "falsified claim".
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace candy
