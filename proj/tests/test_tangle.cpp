#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gen.hpp"
#include "surgeryforge/tangle.hpp"

using namespace sf;

TEST_CASE("reciprocals of integers")
{
    CHECK(is_reciprocal_of_integer(ExtRational(1, 5)));
    CHECK_FALSE(is_reciprocal_of_integer(ExtRational(2, 3)));
    CHECK(is_reciprocal_of_integer(ExtRational::infinity()));
    CHECK_FALSE(is_reciprocal_of_integer(ExtRational(0)));
    CHECK(is_reciprocal_of_integer(ExtRational(1)));
    CHECK(is_reciprocal_of_integer(ExtRational(-1)));
    CHECK_FALSE(is_reciprocal_of_integer(ExtRational(2)));

    for (i64 p = -12; p <= 12; ++p)
        for (i64 q = 1; q <= 12; ++q)
            if (std::gcd(p, q) == 1) CHECK(is_reciprocal_of_integer(ExtRational(p, q)) == (std::abs(p) <= 1 && p != 0));
}

TEST_CASE("tangle sums")
{
    CHECK(sum_is_rational(ExtRational(1, 2), ExtRational(7, 3)));
    CHECK_FALSE(sum_is_rational(ExtRational(2, 3), ExtRational(5, 7)));
    // [0,h] = -1/h
    for (i64 h = -4; h <= 4; ++h)
        if (h != 0) CHECK(sum_is_rational(cf_eval({0, h}), ExtRational(11, 7)));
}

TEST_CASE("Montesinos two-bridge criterion")
{
    CHECK(montesinos_is_two_bridge(MontesinosLink::parse("Q(-2,1/2,7/3)")));
    {
        const i64 r = 5, s = 7, m = 5;
        MontesinosLink q{{ExtRational(-(2 * s - r), s - r), ExtRational(m - 1, m), ExtRational(3, 7)}};
        CHECK_FALSE(montesinos_is_two_bridge(q));
    }
    {
        const i64 m = 0; // m + 1 = 1 = 1/1
        MontesinosLink q{{ExtRational(m + 1), ExtRational(-7, 5), ExtRational(-7, 3)}};
        CHECK(montesinos_is_two_bridge(q));
    }
    const auto q = MontesinosLink::parse("Q(3/2, inf, -4)");
    CHECK(q.str() == "Q(3/2,inf,-4)");
    CHECK(montesinos_is_two_bridge(q));
    CHECK_THROWS(MontesinosLink::parse("Q(1/0/2)"));
}

TEST_CASE("two-bridge criterion ignores factor order")
{
    for (int trial = 0; trial < 3000; ++trial) {
        MontesinosLink q{{gen::slope(6), gen::slope(6), gen::slope(6)}};
        const bool base = montesinos_is_two_bridge(q);
        auto f = q.factors;
        std::sort(f.begin(), f.end());
        do {
            CHECK(montesinos_is_two_bridge(MontesinosLink{f}) == base);
            CHECK(MontesinosLink{f}.fingerprint() == q.fingerprint());
        } while (std::next_permutation(f.begin(), f.end()));
    }
}
