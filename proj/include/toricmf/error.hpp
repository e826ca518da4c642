#pragma once

#include <stdexcept>
#include <string>

namespace toricmf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// User-supplied data violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A construction invariant was broken. Always a bug, never user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The verification engine hit its configured work cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace toricmf
