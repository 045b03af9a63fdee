#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sf {

using i64 = std::int64_t;

// Overflow-checked int64 arithmetic. Every sweep in this library stays far
// below 2^62, so a throw here means a bug, not a big input.
namespace ck {

inline i64 add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in add");
    return r;
}

inline i64 sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in sub");
    return r;
}

inline i64 mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in mul");
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

inline i64 abs(i64 a) { return a < 0 ? neg(a) : a; }

} // namespace ck

// Residue of a mod m in [0, m), m > 0.
inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

// Inverse of a mod m, m >= 2, gcd(a, m) = 1. Throws otherwise.
i64 inverse_mod(i64 a, i64 m);

} // namespace sf
