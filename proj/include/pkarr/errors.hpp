#pragma once

#include <stdexcept>
#include <string>

namespace pkarr {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cross-check between two independent computations disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pkarr
