#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "compatri/stats.hpp"

namespace compatri {

using i64 = std::int64_t;
using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

inline int sign_i128(i128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// 128x128 -> 256 unsigned multiply, returned as (hi, lo) limbs of 128 bits.
struct U256 {
  u128 hi = 0, lo = 0;
};

inline U256 mul_u128(u128 x, u128 y) {
  const u128 mask = (u128(1) << 64) - 1;
  u128 xl = x & mask, xh = x >> 64;
  u128 yl = y & mask, yh = y >> 64;
  u128 ll = xl * yl;
  u128 lh = xl * yh;
  u128 hl = xh * yl;
  u128 hh = xh * yh;
  u128 mid = lh + hl;  // may carry into bit 129
  u128 carry_mid = (mid < lh) ? (u128(1) << 64) : 0;
  u128 lo = ll + (mid << 64);
  u128 carry_lo = (lo < ll) ? 1 : 0;
  U256 r;
  r.lo = lo;
  r.hi = hh + (mid >> 64) + carry_mid + carry_lo;
  return r;
}

inline int cmp_u256(const U256& a, const U256& b) {
  if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
  if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
  return 0;
}

inline u128 abs_i128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

}  // namespace detail

// Exact sign of a*b - c*d for 128-bit operands. This is the one predicate the
// whole rational layer rests on; products up to 2^254 are handled exactly.
inline int sign_of_prod_diff(i128 a, i128 b, i128 c, i128 d) {
  using namespace detail;
  int sab = sign_i128(a) * sign_i128(b);
  int scd = sign_i128(c) * sign_i128(d);
  if (sab != scd) {
    if (sab == 0) return -scd;
    if (scd == 0) return sab;
    return sab;  // opposite nonzero signs: a*b decides
  }
  if (sab == 0) return 0;
  U256 ab = mul_u128(abs_i128(a), abs_i128(b));
  U256 cd = mul_u128(abs_i128(c), abs_i128(d));
  return sab * cmp_u256(ab, cd);
}

inline i128 gcd_i128(i128 a, i128 b) {
  u128 x = detail::abs_i128(a), y = detail::abs_i128(b);
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return i128(x);
}

// Exact rational with 128-bit numerator/denominator, denominator > 0, always
// reduced. Comparisons go through the 256-bit product to stay overflow-free.
struct Rational {
  i128 num = 0;
  i128 den = 1;

  Rational() = default;
  Rational(i128 n, i128 d) : num(n), den(d) { normalize(); }
  static Rational of(i64 v) { return Rational(v, 1); }

  void normalize() {
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    i128 g = gcd_i128(num, den);
    num /= g;
    den /= g;
  }

  bool is_integer() const { return den == 1; }
};

inline int compare(const Rational& a, const Rational& b) {
  stats::bump_orientation();
  return sign_of_prod_diff(a.num, b.den, b.num, a.den);
}
inline bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

std::string to_string(const Rational& r);
std::string to_string_i128(i128 v);

}  // namespace compatri
