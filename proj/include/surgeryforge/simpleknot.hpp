#pragma once

#include <string>
#include <vector>

#include "surgeryforge/lens.hpp"
#include "surgeryforge/rational.hpp"

namespace sf {

// K(p,q,k) in L(p,q), p >= 2, gcd(p,q) = 1, 0 < k < p.
struct SimpleKnot {
    i64 p, q, k;

    SimpleKnot(i64 p, i64 q, i64 k);
    LensSpace lens() const { return lens_normalize(p, q); }
    i64 canonical_k() const { return std::min(k, p - k); }
    std::string str() const;
    bool operator==(const SimpleKnot&) const = default;
};

// Alexander gradings A_0..A_{p-1}, shifted so that max = -min.
std::vector<ExtRational> alexander_set(const SimpleKnot& K);
// Same data in units of 1/(2p), which keeps everything integral.
std::vector<i64> alexander_set_scaled(const SimpleKnot& K);

i64 euler_char(const SimpleKnot& K);
// g = (1 - chi)/2; needs gcd(p,k) = 1 and chi odd.
i64 genus_primitive(const SimpleKnot& K);

// Same q with k -> +-k, or q -> q^-1 with k -> +-q^-1 k.
bool equivalent(const SimpleKnot& a, const SimpleKnot& b);

struct StarSolution {
    i64 k;           // raw residue in (0, p)
    i64 q;           // -k^2 mod p
    i64 canonical_k; // min(k, p-k)
};
// k^2 + eps (k+1) = 0 mod p, all raw residues in increasing order.
std::vector<StarSolution> star_solutions(i64 p, int eps);

// Primitive K(p,q,k), 0 < k <= p/2, of genus g in L.
std::vector<SimpleKnot> knots_with_genus(const LensSpace& l, i64 g);

} // namespace sf
