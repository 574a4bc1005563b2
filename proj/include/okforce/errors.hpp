#pragma once

#include <stdexcept>
#include <string>

namespace okf {

// Malformed input: bad edge lists, out-of-range vertices, invalid family parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds the size an exhaustive routine is configured to accept.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Caller broke an operation's precondition (e.g. a non-forcing set handed to forcing_chains).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The hypothesis of a bound or construction does not hold for this instance.
class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_limit(long long value, long long limit, const std::string& what) {
  if (value > limit) {
    throw LimitError(what + " = " + std::to_string(value) + " exceeds the configured limit of " +
                     std::to_string(limit));
  }
}

}  // namespace okf
