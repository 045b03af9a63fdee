#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surgeryforge/checked.hpp"

namespace sf {

// Element of Q u {inf}. Stored reduced with den >= 0; infinity is 1/0 and
// -1/0 is the same point (slopes carry no orientation).
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(i64 n) : num_(n), den_(1) {} // NOLINT: integers convert implicitly
    ExtRational(i64 n, i64 d);

    static ExtRational infinity() { return from_reduced(1, 0); }
    // Caller guarantees gcd(n, d) = 1, d >= 0, and n = 1 when d = 0.
    static ExtRational from_reduced(i64 n, i64 d)
    {
        ExtRational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_inf() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    // max(|num|, den); infinity has height 1.
    i64 height() const;

    std::string str() const;
    static ExtRational parse(std::string_view text);

    bool operator==(const ExtRational&) const = default;
    // Total order: finite values by size, infinity above everything.
    std::strong_ordering operator<=>(const ExtRational& o) const;

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

ExtRational operator-(const ExtRational& a);
// inf + finite = inf; inf + inf is rejected.
ExtRational operator+(const ExtRational& a, const ExtRational& b);
ExtRational operator-(const ExtRational& a, const ExtRational& b);
// inf * nonzero = inf; inf * 0 is rejected.
ExtRational operator*(const ExtRational& a, const ExtRational& b);
ExtRational operator/(const ExtRational& a, const ExtRational& b);
ExtRational reciprocal(const ExtRational& a);

// Integer 2x2 matrix acting on Q^ by fractional linear maps.
struct Mat2 {
    i64 a, b, c, d;
    ExtRational apply(const ExtRational& x) const;
    Mat2 operator*(const Mat2& o) const;
};

// [a1, ..., an, tail] = a1 - 1/(a2 - 1/(... - 1/tail)). Only the last entry
// may be non-integral.
struct ContFrac {
    std::vector<i64> coeffs;
    std::optional<ExtRational> tail;

    std::string str() const;
    static ContFrac parse(std::string_view text);
};

// Right to left with x -> a - 1/x; the empty fraction is infinity.
ExtRational cf_eval(std::span<const i64> coeffs, std::optional<ExtRational> tail = std::nullopt);
ExtRational cf_eval(const ContFrac& cf);
inline ExtRational cf_eval(std::initializer_list<i64> coeffs, std::optional<ExtRational> tail = std::nullopt)
{
    return cf_eval(std::span<const i64>(coeffs.begin(), coeffs.size()), tail);
}

// Expansion with every coefficient >= 2. Needs x > 1 finite or x = inf
// (which gives the empty sequence).
std::vector<i64> cf_expand_norm(const ExtRational& x);

// The r/s with [a1..an, r/s] = [0, j], i.e. [0, -an, ..., -a1, j].
ExtRational cf_solve_tail(std::span<const i64> prefix, i64 j);

enum class Mobius { reciprocal, negate, f, g };
// f(x) = 1/(1-x), g(x) = -1/(1+x); both have order 3.
ExtRational mobius(const ExtRational& x, Mobius m);
ExtRational shift(const ExtRational& x, i64 n);

} // namespace sf
