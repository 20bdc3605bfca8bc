#pragma once

#include <stdexcept>
#include <string>

namespace gsg {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or malformed numeric input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// 1 + v^T D^{-1} u is too close to zero for a rank-one update.
class SingularUpdate : public Error {
 public:
  using Error::Error;
};

/// Matrix expected to have full row rank does not.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Requested sample matrix would exceed the configured column budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Offset for an arbitrary-point sample lies outside [0, 1].
class InvalidOffset : public Error {
 public:
  using Error::Error;
};

/// The scalar field failed (threw or returned a non-finite value).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// An operation needs analytic derivatives the field does not provide.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Unknown identifier (field id, example id, ...).
class UnknownId : public Error {
 public:
  using Error::Error;
};

}  // namespace gsg
