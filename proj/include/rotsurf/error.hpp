#pragma once

#include <stdexcept>
#include <string>

namespace rotsurf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Power series did not settle within the term cap.
class FailedConvergence : public Error {
 public:
  using Error::Error;
};

/// A computed Lie bracket is neither zero nor plus/minus a generator.
class UnrecognizedBracket : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside a curve's domain, or a non-finite evaluation.
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class UnknownCurve : public Error {
 public:
  using Error::Error;
};

/// Tangent plane degenerate: E*G - F^2 vanishes to working precision.
class DegenerateMetric : public Error {
 public:
  using Error::Error;
};

/// A frame-normalizing radicand vanishes.
class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class BadProjection : public Error {
 public:
  using Error::Error;
};

/// Malformed curve expression or CLI value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Caller broke a documented precondition (wrong spec kind, bad tolerance, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotsurf
