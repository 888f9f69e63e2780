#pragma once

#include <cstdint>
#include <numeric>

#include "latt/error.hpp"

namespace latt {

using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i64 chk_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "64-bit addition overflow");
  }
  return r;
}

inline i64 chk_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "64-bit subtraction overflow");
  }
  return r;
}

inline i64 chk_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "64-bit multiplication overflow");
  }
  return r;
}

inline i128 chk_add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "128-bit addition overflow");
  }
  return r;
}

inline i128 chk_sub128(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "128-bit subtraction overflow");
  }
  return r;
}

inline i128 chk_mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "128-bit multiplication overflow");
  }
  return r;
}

/// Narrows a 128-bit value back to 64 bits, or reports Overflow.
inline i64 narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw Error(ErrorCode::Overflow, "value does not fit in 64 bits");
  }
  return static_cast<i64>(v);
}

/// floor(sqrt(v)) for v >= 0.
inline i128 isqrt128(i128 v) {
  if (v < 0) throw Error(ErrorCode::InvalidInput, "isqrt of negative value");
  if (v == 0) return 0;
  u128 n = static_cast<u128>(v);
  u128 x = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(n)));
  // Correct the floating-point seed exactly.
  while (x > 0 && x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return static_cast<i128>(x);
}

inline i64 isqrt64(i64 v) { return static_cast<i64>(isqrt128(v)); }

/// Floor division for possibly negative numerator.
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

inline i64 gcd64(i64 a, i64 b) { return std::gcd(a, b); }

}  // namespace latt
