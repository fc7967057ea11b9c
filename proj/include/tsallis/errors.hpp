#pragma once

#include <stdexcept>
#include <string>

namespace tsallis {

// Base of every error raised by the library. The CLI maps ParameterError to
// a usage failure and everything else to a runtime failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range argument: p or gamma outside [0,1], q < 0, bad rank, empty interval.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A matrix failed a density-operator or Hermiticity check.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class InvalidSpectrumError : public Error {
 public:
  using Error::Error;
};

// Iterative routine did not converge within its sweep budget.
class NumericError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsallis
