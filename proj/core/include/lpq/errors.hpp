#pragma once

#include <stdexcept>
#include <string>

namespace lpq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (bad file line, nonpositive coefficient,
/// violated precondition on user-supplied parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation could not reach a definite answer within its budget, e.g.
/// a winding number whose circle cannot be certified zero-free.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// Interval enclosures stayed too wide even at the precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpq
