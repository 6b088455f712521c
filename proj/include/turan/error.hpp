#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid sizes, ids, multiplicities or out-of-range specs.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An edge would join two vertices of the same part.
class PartitenessError : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Input outside the host-shape regime a check is stated for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A verification routine would exceed its enumeration cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace turan
