#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>

#include "gen.hpp"
#include "lemma_lists.hpp"
#include "surgeryforge/pentangle.hpp"

using namespace sf;
using namespace lemma;

namespace {

ExtRational R(i64 n, i64 d = 1) { return ExtRational(n, d); }
const ExtRational kInf = ExtRational::infinity();

P5Filling F(ExtRational a, ExtRational b, ExtRational c, ExtRational d) { return {a, b, c, d, std::nullopt}; }

// Oriented Montesinos invariant: the factors are read as reciprocals of
// Seifert invariants; keep their fractional parts and their total.
std::pair<std::vector<ExtRational>, ExtRational> montesinos_invariant(const MontesinosLink& q)
{
    std::vector<ExtRational> frac;
    ExtRational e(0);
    for (const auto& f : q.factors) {
        const ExtRational x = reciprocal(f);
        const i64 fl = x.num() >= 0 ? x.num() / x.den() : -((-x.num() + x.den() - 1) / x.den());
        frac.push_back(x - ExtRational(fl));
        e = e + x;
    }
    std::sort(frac.begin(), frac.end());
    return {frac, e};
}

bool genuine(const MontesinosLink& q)
{
    return std::none_of(q.factors.begin(), q.factors.end(),
                        [](const ExtRational& x) { return x.is_inf() || x.is_integer(); });
}

} // namespace

TEST_CASE("slope enumeration")
{
    const std::vector<ExtRational> want{kInf, R(0), R(1), R(-1), R(1, 2), R(-1, 2), R(2), R(-2)};
    CHECK(slopes_up_to(2) == want);
    CHECK(slopes_up_to(3).size() == 16);
    CHECK(slopes_up_to(4).size() == 24);
    for (const auto& s : slopes_up_to(6)) CHECK(s.height() <= 6);
}

TEST_CASE("M5 and P5 coordinates")
{
    const M5Filling m{{R(3, 2), R(5), R(-1), R(7, 2), R(0)}};
    CHECK(p5_to_m5(m5_to_p5(m)) == m);
    CHECK(m5_to_p5(m).x == R(-1));

    // fifth cusp fillings 0, 1, inf give X = -1, 0, inf
    for (auto [a5, x] : {std::pair{R(0), R(-1)}, {R(1), R(0)}, {kInf, kInf}}) {
        const M5Filling mm{{R(2), R(3), R(5), R(7), a5}};
        CHECK(m5_to_p5(mm).x == x);
    }

    // the maps act coordinate by coordinate, so every slope in each slot
    const auto slopes = slopes_up_to(6);
    for (int slot = 0; slot < 5; ++slot)
        for (const auto& s : slopes) {
            M5Filling mm{{R(2), R(3), R(5), R(7), R(11)}};
            mm.a[static_cast<std::size_t>(slot)] = s;
            CHECK(p5_to_m5(m5_to_p5(mm)) == mm);
            P5Filling f{R(2), R(3), R(5), R(7), R(11)};
            std::array<ExtRational*, 5> slots{&f.nw, &f.ne, &f.sw, &f.se, &*f.x};
            *slots[static_cast<std::size_t>(slot)] = s;
            CHECK(m5_to_p5(p5_to_m5(f)) == f);
        }

    // companion form of the inverse, and random tuples
    for (int trial = 0; trial < 2000; ++trial) {
        P5Filling f{gen::slope(6), gen::slope(6), gen::slope(6), gen::slope(6), gen::slope(6)};
        const M5Filling back = p5_to_m5(f);
        const M5Filling want{{reciprocal(R(1) - f.ne), f.nw, f.se, reciprocal(R(1) - f.sw), *f.x + R(1)}};
        CHECK(back == want);
        CHECK(m5_to_p5(back) == f);
    }
    CHECK_THROWS(p5_to_m5(F(R(2), R(3), R(5), R(7))));
}

TEST_CASE("symmetry group laws")
{
    const P5Filling f{R(2, 3), R(5), kInf, R(-1, 2), R(4)};
    auto apply = [](P5Filling g, Sym s, int times) {
        for (int i = 0; i < times; ++i) g = symmetry(g, s);
        return g;
    };
    CHECK(apply(f, Sym::rot3, 3) == f);
    CHECK(apply(f, Sym::rot3, 1) != f);
    for (int trial = 0; trial < 2000; ++trial) {
        P5Filling g{gen::slope(7), gen::slope(7), gen::slope(7), gen::slope(7), gen::slope(7)};
        for (Sym s : {Sym::swapLR, Sym::swapTB, Sym::swapFB}) CHECK(apply(g, s, 2) == g);
        // the mirror is a quarter turn: its square is swapFB
        CHECK(apply(g, Sym::mirror, 2) == symmetry(g, Sym::swapFB));
        CHECK(apply(g, Sym::mirror, 4) == g);
        CHECK(apply(g, Sym::rot3, 3) == g);
        P5Filling h = g;
        for (int i = 0; i < 3; ++i) h = rot3_ne(h);
        CHECK(h == g);
        // the rotation fixing NE keeps NE and moves X like rot3
        CHECK(rot3_ne(g).ne == mobius(g.ne, Mobius::f));
        CHECK(rot3_ne(g).x == symmetry(g, Sym::rot3).x);
        CHECK(symmetry(g, Sym::rot3).se == mobius(g.se, Mobius::f));
    }
}

TEST_CASE("predicate examples")
{
    CHECK(is_nonhyperbolic(F(R(0), R(5, 2), R(7, 3), R(9, 4))));
    CHECK(is_nonhyperbolic(F(R(-1), R(2), R(7, 3), R(9, 4))));
    CHECK_FALSE(is_nonhyperbolic(F(R(5, 2), R(7, 3), R(-3), R(9, 4))));
    for (const auto& d : {R(0), R(1), kInf}) CHECK(is_nonhyperbolic(F(R(5, 2), R(7, 3), R(-3), d)));

    CHECK(factors_through_P3(F(R(2), R(-2), R(7, 3), R(9, 4))) == P3Factor::P3);
    CHECK(factors_through_P3(F(R(-1), R(3), R(7, 3), R(9, 4))) == P3Factor::mirrorP3);
    CHECK(factors_through_P3(F(R(5, 2), R(7, 3), R(-3), R(9, 4))) == P3Factor::no);

    CHECK(simplifies(F(R(0), R(5, 2), R(7, 3), R(9, 4))));
    CHECK(simplifies(F(R(2), R(-2), R(7, 3), R(9, 4))));
    CHECK(simplifies(F(R(-1), R(3), R(7, 3), R(9, 4))));
    CHECK_FALSE(simplifies(F(R(5, 2), R(7, 3), R(-3), R(9, 4))));
}

TEST_CASE("lemma lists agree with the library predicate")
{
    // values from the lists plus two that occur in none
    const std::vector<ExtRational> vals{R(2), R(-2), R(-1), R(3, 2), R(1, 2), R(1, 3), R(3), R(-1, 2), R(2, 3), R(5, 7), R(7, 5)};
    for (const auto& a : vals)
        for (const auto& b : vals)
            for (const auto& c : vals)
                for (const auto& d : vals) {
                    const Quad q{a, b, c, d};
                    const P3Factor got = factors_through_P3(F(a, b, c, d));
                    CHECK((got == P3Factor::P3) == hits(q, kP3));
                    if (!hits(q, kP3)) CHECK((got == P3Factor::mirrorP3) == hits(q, kMirrorP3));
                }
}

TEST_CASE("third P3 line is the rotation image of the first")
{
    // rot3 twice carries {NW,NE} = {-1,-1} to {NE,SW} = {2,2}
    const P5Filling f = F(R(-1), R(-1), R(5, 7), R(7, 5));
    const P5Filling g = symmetry(symmetry(f, Sym::rot3), Sym::rot3);
    CHECK(g.ne == R(2));
    CHECK(g.sw == R(2));
    CHECK(factors_through_P3(g) == P3Factor::P3);
    // and {-2,-2} in that position is not a P3 filling
    CHECK(factors_through_P3(F(R(5, 7), R(-2), R(-2), R(7, 5))) == P3Factor::no);

    // every first-line pair on (NW,NE) lands in the second and third lines
    for (const auto& [a, b] : kP3[0]) {
        const P5Filling h = F(a, b, R(5, 7), R(7, 5));
        const P5Filling r1 = symmetry(h, Sym::rot3);
        const P5Filling r2 = symmetry(r1, Sym::rot3);
        const Pairs& l1 = kP3[1];
        const Pairs& l2 = kP3[2];
        auto in = [](const Pairs& l, const ExtRational& u, const ExtRational& v) {
            return std::any_of(l.begin(), l.end(), [&](const auto& p) {
                return (p.first == u && p.second == v) || (p.first == v && p.second == u);
            });
        };
        CHECK(in(l1, r1.nw, r1.sw));
        CHECK(in(l2, r2.ne, r2.sw));
    }
}

TEST_CASE("mirror: reciprocals and a position permutation")
{
    // reciprocals of the first mirror line are the second P3 line
    Pairs recips;
    for (const auto& [a, b] : kMirrorP3[0]) recips.emplace_back(reciprocal(a), reciprocal(b));
    const Pairs want{{R(-1), R(1, 3)}, {R(1, 2), R(-2)}, {R(2), R(3, 2)}, {R(-1), R(2)}, {R(1, 2), R(1, 2)}};
    CHECK(recips == want);

    // Search all 24 permutations for those that carry the P3 lists onto
    // the mirror lists, and check the library's mirror is one of them.
    const std::vector<ExtRational> vals{R(2), R(-2), R(-1), R(3, 2), R(1, 2), R(1, 3), R(3), R(-1, 2), R(2, 3), R(5, 7)};
    std::array<int, 4> perm{0, 1, 2, 3};
    std::vector<std::array<int, 4>> good;
    do {
        bool ok = true;
        for (const auto& a : vals)
            for (const auto& b : vals)
                for (const auto& c : vals)
                    for (const auto& d : vals) {
                        if (!ok) break;
                        const Quad q{a, b, c, d};
                        Quad img;
                        for (int i = 0; i < 4; ++i) img[perm[i]] = reciprocal(q[i]);
                        ok = hits(q, kP3) == hits(img, kMirrorP3);
                    }
        if (ok) good.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE_FALSE(good.empty());

    int matches = 0;
    for (const auto& p : good) {
        bool same = true;
        for (int trial = 0; trial < 200 && same; ++trial) {
            const P5Filling f = F(gen::slope(5), gen::slope(5), gen::slope(5), gen::slope(5));
            const Quad q = quad(f);
            Quad img;
            for (int i = 0; i < 4; ++i) img[p[i]] = reciprocal(q[i]);
            same = quad(symmetry(f, Sym::mirror)) == img;
        }
        matches += same;
    }
    CHECK(matches == 1);
}

TEST_CASE("simplifies is invariant under the symmetries (height <= 4)")
{
    const auto slopes = slopes_up_to(4);
    REQUIRE(slopes.size() == 24);
    long bad = 0;
    for (const auto& a : slopes)
        for (const auto& b : slopes)
            for (const auto& c : slopes)
                for (const auto& d : slopes) {
                    const P5Filling f = F(a, b, c, d);
                    const bool s = simplifies(f);
                    for (Sym sym : {Sym::swapLR, Sym::swapTB, Sym::swapFB, Sym::rot3, Sym::mirror})
                        bad += simplifies(symmetry(f, sym)) != s;
                    bad += simplifies(rot3_ne(f)) != s;
                }
    CHECK(bad == 0);
}

TEST_CASE("chart rows")
{
    // NW = -1 = [0,1], NE = [1,m], x = 0
    for (i64 m = -4; m <= 4; ++m) {
        if (m == 0) continue;
        const ExtRational ne = cf_eval({1, m});
        CHECK(ne == R(m - 1, m));
        for (auto [r, s] : {std::pair<i64, i64>{5, 7}, {2, 9}, {-3, 4}, {7, 3}}) {
            const ExtRational sw = R(r, s), se = R(11, 4);
            const auto q = chart_row(F(R(-1), ne, sw, se), Row::WxNW);
            REQUIRE(q);
            CHECK(*q == MontesinosLink{{cf_eval({-1, 1}, sw), R(m - 1, m), se}});
            CHECK(q->factors[0] == R(s - 2 * r, r - s));
            // the closed form -(2s-r)/(s-r) is this factor with r and s exchanged
            CHECK(cf_eval({-1, 1}, R(s, r)) == R(-(2 * s - r), s - r));
        }
    }

    // NxNW: Q([1, n+NE], [0,SW], [0,SE])
    for (i64 n = -3; n <= 3; ++n) {
        const ExtRational ne = R(2, 7), sw = R(5, 3), se = R(-4, 9);
        const auto q = chart_row(F(R(n), ne, sw, se), Row::NxNW);
        REQUIRE(q);
        CHECK(*q == MontesinosLink{{cf_eval({1}, ne + R(n)), cf_eval({0}, sw), cf_eval({0}, se)}});
    }

    // FxNE with NE = [1,m]: Q([1,NW], [m,1,SW], -1+SE)
    {
        const ExtRational nw = R(3, 5), sw = R(7, 2), se = R(9, 4);
        const auto q = chart_row(F(nw, cf_eval({1, 3}), sw, se), Row::FxNE);
        REQUIRE(q);
        CHECK(*q == MontesinosLink{{cf_eval({1}, nw), cf_eval({3, 1}, sw), se - R(1)}});
    }

    // constraints gate the rows
    CHECK_FALSE(chart_row(F(R(3, 5), R(2, 5), R(7, 3), R(9, 4)), Row::WxNW));
    CHECK_FALSE(chart_row(F(R(3, 5), R(2, 5), R(7, 3), R(9, 4)), Row::NxNW));
    CHECK(row_filling(Row::WxSW) == R(0));
    CHECK(row_filling(Row::NxNE) == kInf);
    CHECK(row_filling(Row::FxSW) == R(-1));
}

TEST_CASE("presentations and the two-bridge condition")
{
    // no slope is 1/j, an integer or 1 - 1/j: nothing is emitted
    const P5Filling f = F(R(3, 5), R(2, 5), R(7, 3), R(9, 4));
    for (const auto& x : {R(0), kInf, R(-1)}) CHECK(montesinos_presentations(f, x).empty());

    // with SE = -1/3 only rows whose constraint holds on the image appear
    const P5Filling g = F(R(3, 5), R(2, 5), R(7, 3), R(-1, 3));
    const auto ps = montesinos_presentations(g, R(0));
    CHECK_FALSE(ps.empty());
    for (const auto& p : ps) {
        const P5Filling h = symmetry(g, p.sigma);
        const ExtRational& anchor = p.row == Row::WxNW ? h.nw : p.row == Row::WxSW ? h.sw : p.row == Row::ExNE ? h.ne : h.se;
        CHECK(is_reciprocal_of_integer(anchor));
        CHECK(chart_row(h, p.row) == p.link);
    }
    CHECK_THROWS(montesinos_presentations(g, R(2)));

    // NW = -1, NE = 1/2 (m = 2) makes L_0 two-bridge for any SW, SE
    for (int trial = 0; trial < 200; ++trial)
        CHECK(two_bridge_necessary(F(R(-1), R(1, 2), gen::slope(9), gen::slope(9)), R(0)));
    CHECK_FALSE(two_bridge_necessary(F(R(5, 2), R(7, 3), R(-3), R(9, 4)), R(0)));
}

TEST_CASE("case triples")
{
    const auto& cs = case_triples();
    // the eight cases treated one by one, read off their headings
    const std::map<int, std::array<Row, 3>> headings = {
        {1, {Row::WxNW, Row::NxNW, Row::FxNE}},  {2, {Row::WxNW, Row::NxNW, Row::FxSW}},
        {4, {Row::WxNW, Row::NxNE, Row::FxSW}},  {5, {Row::WxSW, Row::NxNW, Row::FxNE}},
        {9, {Row::ExNE, Row::NxNW, Row::FxNE}},  {10, {Row::ExNE, Row::NxNW, Row::FxSW}},
        {11, {Row::ExNE, Row::NxNE, Row::FxNE}}, {14, {Row::ExSE, Row::NxNW, Row::FxSW}},
    };
    for (const auto& [n, rows] : headings) {
        const auto& c = cs[static_cast<std::size_t>(n - 1)];
        CHECK(std::array<Row, 3>{c.we, c.n, c.f} == rows);
        CHECK(case_of_rows(rows[2], rows[0], rows[1]) == n);
    }
    CHECK(case_of_rows(Row::WxNW, Row::WxSW, Row::NxNW) == 0);

    auto orbit = [&](int start, Row (*perm)(Row)) {
        std::vector<int> out{start};
        CaseTriple c = cs[static_cast<std::size_t>(start - 1)];
        for (int i = 0; i < 2; ++i) {
            c = {perm(c.we), perm(c.n), perm(c.f)};
            out.push_back(case_of_rows(c.we, c.n, c.f));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(orbit(1, permute_row_se) == std::vector<int>{1, 6, 7});
    CHECK(orbit(2, permute_row_se) == std::vector<int>{2, 3, 8});
    CHECK(orbit(9, permute_row_ne) == std::vector<int>{9, 12, 15});
    CHECK(orbit(10, permute_row_ne) == std::vector<int>{10, 13, 16});
    for (Row r : kAllRows) {
        CHECK(permute_row_se(permute_row_se(permute_row_se(r))) == r);
        CHECK(permute_row_ne(permute_row_ne(permute_row_ne(r))) == r);
        // moved rows follow X under x -> -1/(1+x)
        if (permute_row_se(r) != r) CHECK(row_filling(permute_row_se(r)) == mobius(row_filling(r), Mobius::g));
        if (permute_row_ne(r) != r) CHECK(row_filling(permute_row_ne(r)) == mobius(row_filling(r), Mobius::g));
    }
}

TEST_CASE("rows agree under the order-3 rotations (height <= 4)")
{
    // The rotated filling has the same double branched cover, so the row
    // exists on one side iff it does on the other, the two-bridge verdict
    // agrees, and genuine Montesinos links have the same invariant.
    const auto slopes = slopes_up_to(4);
    long checked = 0, genuine_links = 0, bad = 0;
    for (const auto& a : slopes)
        for (const auto& b : slopes)
            for (const auto& c : slopes)
                for (const auto& d : slopes) {
                    const P5Filling f = F(a, b, c, d);
                    const P5Filling gs = symmetry(f, Sym::rot3), gn = rot3_ne(f);
                    for (Row r : kAllRows) {
                        for (int which = 0; which < 2; ++which) {
                            const Row r2 = which == 0 ? permute_row_se(r) : permute_row_ne(r);
                            if (r2 == r) continue;
                            const auto q1 = chart_row(f, r);
                            const auto q2 = chart_row(which == 0 ? gs : gn, r2);
                            ++checked;
                            if (q1.has_value() != q2.has_value()) {
                                ++bad;
                                continue;
                            }
                            if (!q1) continue;
                            bad += montesinos_is_two_bridge(*q1) != montesinos_is_two_bridge(*q2);
                            if (genuine(*q1) && genuine(*q2)) {
                                ++genuine_links;
                                bad += montesinos_invariant(*q1) != montesinos_invariant(*q2);
                            }
                        }
                    }
                }
    CHECK(bad == 0);
    CHECK(genuine_links > 10000);
    MESSAGE("row pairs ", checked, ", genuine Montesinos ", genuine_links);
}

TEST_CASE("sweep at height 3")
{
    const PentangleReport serial = verify_fillingsimplifies_serial(3);
    CHECK(serial.tuples_checked == 65536);
    CHECK(serial.necessary_all_three == 12640);
    CHECK(serial.counterexamples.empty());
    CHECK(serial.simplified == serial.necessary_all_three);
    for (int jobs : {1, 2, 4}) CHECK(verify_fillingsimplifies(3, jobs) == serial);
    CHECK_THROWS(verify_fillingsimplifies(1));
    CHECK_THROWS(verify_fillingsimplifies_serial(1));
}
