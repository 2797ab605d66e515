#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two operands live in cyclic groups of different order.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Seeing one of these means a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace selfsim
