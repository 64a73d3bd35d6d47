#pragma once

#include <cstdint>

#include "lrcat/errors.hpp"

namespace lrcat {

// Coefficients are 64-bit with explicit overflow checks; nothing in this
// library is allowed to wrap silently.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient addition overflowed");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient multiplication overflowed");
  return r;
}

}  // namespace lrcat
