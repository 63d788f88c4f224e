#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "ltet/error.hpp"

namespace ltet {

using Int = std::int64_t;

namespace checked {

[[noreturn]] inline void overflow(const char* op) {
  fail(ErrorKind::kOverflow, std::string("integer overflow in ") + op);
}

[[nodiscard]] inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

[[nodiscard]] inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

[[nodiscard]] inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

[[nodiscard]] inline Int neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) overflow("neg");
  return -a;
}

[[nodiscard]] inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

[[nodiscard]] inline Int sq(Int a) { return mul(a, a); }

[[nodiscard]] inline Int mul(Int a, Int b, Int c) { return mul(mul(a, b), c); }

// Exact division; returns false when den does not divide num.
[[nodiscard]] inline bool div_exact(Int num, Int den, Int& out) {
  if (den == 0) fail(ErrorKind::kInternal, "division by zero");
  if (num % den != 0) return false;
  if (num == std::numeric_limits<Int>::min() && den == -1) overflow("div");
  out = num / den;
  return true;
}

}  // namespace checked

// floor(sqrt(v)) for v >= 0, exact over the full 64-bit range.
[[nodiscard]] Int isqrt(Int v);

// True with *root set when v is a perfect square.
[[nodiscard]] bool is_square(Int v, Int* root = nullptr);

[[nodiscard]] Int gcd(Int a, Int b);

}  // namespace ltet
