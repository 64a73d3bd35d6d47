#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrcat {

// A word that should consist of distinct letters (or be a permutation) is not.
struct InvalidWordError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed textual encoding. `pos` is the 0-based offset of the offending
// character (== input size when the input ended too early).
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " (at position " + std::to_string(at) + ")"),
        pos(at) {}
};

// Coefficient arithmetic left the representable range.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// A tree product expansion was not a disjoint union of full fibers.
struct ClosureViolationError : std::logic_error {
  using std::logic_error::logic_error;
};

// A verification sweep found a violated invariant.
struct AssertionFailure : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lrcat
