#pragma once

#include <stdexcept>
#include <string>

namespace signull {

// Malformed input: bad vertex ids, loops, duplicate edges, bad parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The graph is well formed but not of the class an operation requires
// (tree, unicyclic, connected, cycle rank at most one).
class ShapeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds a configured size bound of an exhaustive routine.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised when two independent computations that must agree do not.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace signull
