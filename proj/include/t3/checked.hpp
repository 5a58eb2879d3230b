#pragma once

// Overflow-checked 64-bit integer arithmetic. Every combinatorial quantity
// in this library is exact; an operation that would wrap throws
// std::overflow_error instead.

#include <cstdint>
#include <stdexcept>

namespace t3 {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::int64_t r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

}  // namespace t3
