#pragma once

#include <stdexcept>
#include <string>

namespace lpadic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised when a p-adic quantity is asked for more digits than it carries.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// A character value outside the (p-1)-st roots of unity in Z_p.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// Character table that is not a homomorphism or is incomplete.
class InvalidCharacter : public Error {
 public:
  using Error::Error;
};

class LevelOrder : public Error {
 public:
  using Error::Error;
};

class LevelTooLow : public Error {
 public:
  using Error::Error;
};

class NotMultipleOfConductor : public Error {
 public:
  using Error::Error;
};

/// Violated standing hypothesis (parity, coprimality, primality) of a computation.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lpadic
