#pragma once

#include <numeric>

#include "latt/checked.hpp"

namespace latt {

/// Exact rational with 64-bit numerator/denominator, always reduced and
/// with positive denominator.  Intermediates run through 128 bits and any
/// overflow of the reduced result is a reported error.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    if (d < 0) {
      n = chk_sub(0, n);
      d = chk_sub(0, d);
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  static Rat make128(i128 n, i128 d) {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    u128 a = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
    u128 b = static_cast<u128>(d);
    u128 g = a;
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    g = (g == 0 && a == 0) ? 1 : a;
    if (g == 0) g = 1;
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    Rat r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make128(chk_add128(chk_mul128(a.num, b.den), chk_mul128(b.num, a.den)),
                   chk_mul128(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make128(chk_sub128(chk_mul128(a.num, b.den), chk_mul128(b.num, a.den)),
                   chk_mul128(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make128(chk_mul128(a.num, b.num), chk_mul128(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    return make128(chk_mul128(a.num, b.den), chk_mul128(a.den, b.num));
  }
  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num) * b.den < i128(b.num) * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) {
    return i128(a.num) * b.den <= i128(b.num) * a.den;
  }
};

}  // namespace latt
