#pragma once

#include <stdexcept>
#include <string>

namespace genfx {

/// Malformed or out-of-range input (bad dimensions, bad vertex ids, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal cross-check failed. Seeing one of these means a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Problem size exceeds what an exhaustive routine accepts.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace genfx
