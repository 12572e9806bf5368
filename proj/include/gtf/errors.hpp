#pragma once

#include <stdexcept>
#include <string>

namespace gtf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates its type invariant (p <= 1, c a nonpositive integer, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is infinite (e.g. 2F1 at z = 1 with c - a - b <= 0).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its work cap before reaching the tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A finite input produced a non-finite result.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtf
