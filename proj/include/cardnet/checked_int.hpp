// Overflow-checked 64-bit integer helpers used by the size formulas.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace cardnet {

inline bool is_power_of_two(long long v) {
  return v > 0 && (v & (v - 1)) == 0;
}

// Exact base-2 logarithm; the argument must be a power of two.
inline int ilog2(long long v) {
  if (!is_power_of_two(v))
    throw std::invalid_argument("ilog2: argument is not a power of two");
  return std::countr_zero(static_cast<unsigned long long>(v));
}

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

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::int64_t checked_pow2(int exp) { return checked_pow(2, exp); }

}  // namespace cardnet
