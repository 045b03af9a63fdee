#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "surgeryforge/rational.hpp"

namespace sf {

// x = 1/j for an integer j, counting inf = 1/0 but not 0.
bool is_reciprocal_of_integer(const ExtRational& x);

// A sum of two rational tangles is rational iff a summand is 1/j.
bool sum_is_rational(const ExtRational& a, const ExtRational& b);

struct MontesinosLink {
    std::vector<ExtRational> factors;

    std::string str() const;
    static MontesinosLink parse(std::string_view text); // "Q(a/b,c/d,e/f)"
    // Factors sorted, for comparing links up to reordering.
    std::vector<ExtRational> fingerprint() const;
    bool operator==(const MontesinosLink&) const = default;
};

// Two-bridge criterion: some factor is 1/j.
bool montesinos_is_two_bridge(const MontesinosLink& q);

} // namespace sf
