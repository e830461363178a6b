#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Raised when an operation's mathematical precondition does not hold
/// (non-invertible series, pole in a quotient, truncation too short, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace umbral
