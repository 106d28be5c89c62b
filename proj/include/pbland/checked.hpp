#pragma once

#include <cstdint>
#include <limits>

#include "pbland/error.hpp"

namespace pbland {

// Exact 64-bit arithmetic; every overflow raises ArithmeticOverflow.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "addition overflows int64");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "subtraction overflows int64");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::ArithmeticOverflow, "multiplication overflows int64");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::ArithmeticOverflow, "negation overflows int64");
  return -a;
}

}  // namespace pbland
