#pragma once

#include <stdexcept>
#include <string>

namespace crs {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Result not representable as a finite positive double.
class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Series or quadrature failed to reach the requested accuracy.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two expansion terms whose cross moment does not vanish.
class NonOrthogonalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (function specs, complex numbers, configs).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace crs
