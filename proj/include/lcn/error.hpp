#pragma once

#include <stdexcept>
#include <string>

namespace lcn {

// Bad input: malformed architecture, mismatched dimensions, out-of-range sizes.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Valid input the library deliberately does not handle (e.g. non-hypersurface
// critical point counting).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lcn
