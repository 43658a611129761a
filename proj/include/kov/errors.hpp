#pragma once

#include <stdexcept>
#include <string>

namespace kov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergentLimit : public Error {
 public:
  using Error::Error;
};

class SubstitutionCreatesNegativePower : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DeltaZero : public Error {
 public:
  using Error::Error;
};

class BadPartition : public Error {
 public:
  using Error::Error;
};

class NotInSigma0 : public Error {
 public:
  using Error::Error;
};

class ResidueMismatch : public Error {
 public:
  using Error::Error;
};

class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

class SingularSample : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kov
