#pragma once

#include <stdexcept>
#include <string>

namespace hypertan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or contradictory input; CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands live over incompatible number fields.
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// Two curves share a component where the operation forbids it.
class CommonComponentError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A degree budget (factorization or field extension) was exceeded; CLI exit code 3.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A theorem-level invariant failed; always a bug. CLI exit code 4.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertan
