#pragma once

#include <stdexcept>
#include <string>

namespace twoblocks {

// Malformed input: out-of-range endpoints, self-loops, unparsable files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but violates an operation's precondition,
// e.g. a strongly connected graph was required.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive routines refuse instances above their size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace twoblocks
