#pragma once

#include <stdexcept>
#include <string>

namespace finspec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe the structure it claims to (bad index,
/// cyclic relation, missing meet, unparsable file).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain, e.g. regularizing a set that
/// is not a down-set.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (enumeration maximum, down-set lattice cap,
/// point capacity of a PointSet).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A mathematical postcondition the library checks at runtime did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace finspec
