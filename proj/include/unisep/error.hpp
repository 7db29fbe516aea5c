#pragma once

#include <stdexcept>
#include <string>

namespace unisep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or primes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class PrimeMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical content of an argument failed
/// (non-unipotent input, non-isometry, weight outside the table, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A randomized search gave up before reaching a decision.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured dimension budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace unisep
