#pragma once

#include <stdexcept>
#include <string>

namespace p24 {

// Base of every error raised by the library. The CLI maps each subclass to an
// exit code, so new subclasses should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class CutoffError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace p24
