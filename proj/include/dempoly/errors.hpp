#pragma once

#include <stdexcept>
#include <string>

namespace dempoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad index, rank mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Algebra or operation not covered (e.g. full Weyl group above rank 3).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a pole of a rational expression.
class ResampleRequired : public Error {
 public:
  using Error::Error;
};

/// Two numeric routes that must agree did not.
class NumericMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace dempoly
