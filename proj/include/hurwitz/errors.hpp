#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of different sizes (|alpha| != |beta|, lambda vs mu, ...).
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured or hard cap was exceeded. The message names the cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Fewer sample points exist than were requested.
class Exhaustion : public Error {
 public:
  using Error::Error;
};

/// Interpolation system is rank deficient; resample and retry.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// No polynomial up to the degree cap reproduces the data.
class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A cross-check that must hold by construction failed (e.g. a
/// non-integral walk count). Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hurwitz
