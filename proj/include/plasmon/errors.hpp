#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace plasmon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad stack ordering, out-of-range parameters, bad JSON.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidGeometry : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Formula evaluated at a point where it is singular (e.g. curvature at xi = 0).
class SingularGeometry : public Error {
 public:
  using Error::Error;
};

/// sigma1 == sigma0, so the contrast parameter is undefined.
class ContrastSingular : public Error {
 public:
  using Error::Error;
};

/// lambda == 1/2 maps to an infinite conductivity.
class InfiniteConductivity : public Error {
 public:
  using Error::Error;
};

class NoRealFrequency : public Error {
 public:
  using Error::Error;
};

class CombinatorialExplosion : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Two independent computations of the same quantity disagree.
class CrossValidationFailure : public Error {
 public:
  using Error::Error;
};

class NumericalInstability : public Error {
 public:
  using Error::Error;
};

/// The density system is singular: the requested contrast sits on a plasmon mode.
class AtResonance : public Error {
 public:
  AtResonance(const std::string& what, int order, bool odd)
      : Error(what), order_(order), odd_(odd) {}
  int order() const noexcept { return order_; }
  bool odd() const noexcept { return odd_; }

 private:
  int order_;
  bool odd_;
};

class AmbiguousRegion : public Error {
 public:
  using Error::Error;
};

class DegenerateCurve : public Error {
 public:
  using Error::Error;
};

class InvalidNesting : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

namespace detail {

/// Short scientific rendering for error messages.
inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace detail

}  // namespace plasmon
