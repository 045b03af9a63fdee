#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "surgeryforge/rational.hpp"

namespace sf {

// L(p,q) with p >= 0. S^3 is L(1,0), S^1 x S^2 is L(0,1); otherwise
// p >= 2 and 0 < q < p with gcd(p,q) = 1.
struct LensSpace {
    i64 p = 1;
    i64 q = 0;

    bool is_s3() const { return p == 1; }
    bool is_s1s2() const { return p == 0; }
    std::string str() const;
    static LensSpace parse(std::string_view text);

    auto operator<=>(const LensSpace&) const = default;
};

// Uses L(-p,-q) = L(p,q) and q mod p. Rejects gcd(p,q) != 1.
LensSpace lens_normalize(i64 p, i64 q);

// q' = q or q q' = 1 mod p.
bool homeo_oriented(const LensSpace& a, const LensSpace& b);
LensSpace mirror(const LensSpace& l);
bool homeo_unoriented(const LensSpace& a, const LensSpace& b);

// -p/q surgery on the unknot.
LensSpace from_surgery(const ExtRational& r);
// The lens space with p/q = x (chain-link convention, x = [a1..an]).
LensSpace lens_of_value(const ExtRational& x);

// Representative of the oriented class: (p, min(q, q^-1 mod p)).
LensSpace oriented_key(const LensSpace& l);

} // namespace sf
