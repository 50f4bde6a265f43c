#pragma once

#include <stdexcept>
#include <string>

namespace econolab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series timestamps are non-uniform or incompatible with a requested step.
class SpacingError : public Error {
 public:
  using Error::Error;
};

/// Too few observations for the requested computation.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A parameter bundle violates one of its structural constraints.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// The coefficient of the quantity being solved for vanishes.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A sampling density cannot be normalized on the given support.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Input carries no usable variation (all-equal samples, constant series).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Requested process parameters violate the stationarity condition.
class StationarityError : public Error {
 public:
  using Error::Error;
};

/// Knot or breakpoint sequences are not strictly increasing.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A histogram segment holds too few samples to regress.
class SegmentError : public Error {
 public:
  using Error::Error;
};

/// Discretization too coarse for the process being simulated.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A fitting procedure could not produce any candidate solution.
class FitError : public Error {
 public:
  using Error::Error;
};

/// File or stream I/O failure (used by the command-line layer).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace econolab
