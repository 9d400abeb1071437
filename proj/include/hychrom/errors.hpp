#pragma once

#include <stdexcept>
#include <string>

namespace hychrom {

// Input document or construction parameters rejected at validation time.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation would exceed its configured enumeration or work cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural theorem the library verifies failed to hold, or an internal
// uniqueness assertion fired. Must never happen on valid inputs.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The root finder could not meet its residual contract within the iteration
// cap. Reported explicitly, never silently truncated.
class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hychrom
