#pragma once

#include <stdexcept>
#include <string>

namespace zrank {

// Malformed textual input (shape literals, Cauchy spec literals, fractions).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value violates the invariants of the type it is being turned into,
// or an operation was called outside its precondition.
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A brute-force oracle was asked to go past its configured bound.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace zrank
