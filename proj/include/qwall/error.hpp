#pragma once

#include <stdexcept>
#include <string>

namespace qwall {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one qwall_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation
// (non-positive level index, diverging occupation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration (empty grid, t_min > t_max, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An approximation produced a solution outside the range where its
// formula is defined.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Quadrature failed to reach its error target.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Root finding did not converge. Carries the last bracket.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double lower, double upper)
      : Error(what), lower_(lower), upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace qwall
