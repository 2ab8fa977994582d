#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Malformed polynomial/scalar text. `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Precondition violation: dimension mismatch, arity, inhomogeneous input,
/// zero polynomial where a degree is needed, excluded parameter values.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant the library itself guarantees was observed to fail.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace apolar
