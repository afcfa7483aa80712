#pragma once

#include <stdexcept>
#include <string>

namespace tcs {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simplicial identities fail, or a file/table is malformed.
class InvalidData : public Error {
 public:
  using Error::Error;
};

class BoundMismatch : public Error {
 public:
  using Error::Error;
};

/// A level (or enumeration) exceeded the configured simplex cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Wall-clock budget of an operation ran out. `what()` carries the
/// partial-progress diagnostic.
class Timeout : public Error {
 public:
  using Error::Error;
};

class NonAbelian : public Error {
 public:
  using Error::Error;
};

class NotFibration : public Error {
 public:
  using Error::Error;
};

/// A complex that was expected to satisfy the Kan condition does not.
class NotKan : public Error {
 public:
  using Error::Error;
};

}  // namespace tcs
