#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// A documented hypothesis of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable size limit was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cherednik
