#pragma once

// Checked 64-bit arithmetic. Every counting routine goes through these so
// overflow surfaces as OverflowError instead of wrapping.

#include <cstdint>
#include <string>

#include "stirling/errors.hpp"

namespace stirling {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

/// (2n-1)!! = 1 * 3 * ... * (2n-1), the number of Stirling permutations of
/// order n. Fits in 64 bits for n <= 17.
inline std::uint64_t double_factorial_odd(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned k = 2; k <= n; ++k) r = checked_mul(r, 2 * k - 1);
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace stirling
