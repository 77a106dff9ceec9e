#pragma once

#include <cstdint>

#include "scltwist/errors.hpp"

namespace scltwist::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer overflow in addition");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer overflow in subtraction");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer overflow in multiplication");
  }
  return out;
}

}  // namespace scltwist::detail
