#pragma once

#include <stdexcept>
#include <string>

namespace tauber {

// Root of every error raised by the library. The CLI maps subclasses onto
// exit codes (capacity -> 3, everything else that is a usage problem -> 2).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size or term-count cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A part set is malformed, or has gcd > 1 where gcd 1 is required.
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

// A theorem's hypothesis (e.g. k >= 2) is not met by the arguments.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inputs of mismatched length or coverage.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Exponential brute-force oracle asked to go past its guard.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauber
