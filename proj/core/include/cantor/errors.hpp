#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation,
/// e.g. a parameter outside (0, 1/m].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested coding does not occur for any parameter in (0, 1/m].
class NoRoot : public Error {
 public:
  using Error::Error;
};

/// Bracket refinement hit its iteration cap before two values separated.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// The point lies outside the convex hull [0, (m-1)λ/(1-λ)] of K_λ.
class HullViolation : public Error {
 public:
  using Error::Error;
};

/// A word fails the admissibility order for the given point.
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

/// No cover interval meets the requested window.
class EmptyWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace cantor
