#include "surgeryforge/pentangle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sf {

namespace {

const ExtRational kInf = ExtRational::infinity();

ExtRational one_minus_recip(const ExtRational& a) { return ExtRational(1) - reciprocal(a); }

} // namespace

std::string P5Filling::str() const
{
    std::string s = "(" + nw.str() + "," + ne.str() + "," + sw.str() + "," + se.str();
    if (x) s += "," + x->str();
    return s + ")";
}

i64 P5Filling::height() const
{
    i64 h = std::max({nw.height(), ne.height(), sw.height(), se.height()});
    return x ? std::max(h, x->height()) : h;
}

P5Filling m5_to_p5(const M5Filling& m)
{
    const auto& a = m.a;
    return {a[1], one_minus_recip(a[0]), one_minus_recip(a[3]), a[2], shift(a[4], -1)};
}

M5Filling p5_to_m5(const P5Filling& f)
{
    if (!f.x) throw std::invalid_argument("p5_to_m5 needs the fifth slope");
    return {{mobius(f.ne, Mobius::f), f.nw, f.se, mobius(f.sw, Mobius::f), shift(*f.x, 1)}};
}

P5Filling symmetry(const P5Filling& f, Sym s)
{
    auto fx = [&](Mobius m) -> std::optional<ExtRational> {
        if (!f.x) return std::nullopt;
        return mobius(*f.x, m);
    };
    switch (s) {
    case Sym::identity: return f;
    case Sym::swapLR: return {f.ne, f.nw, f.se, f.sw, f.x};
    case Sym::swapTB: return {f.sw, f.se, f.nw, f.ne, f.x};
    case Sym::swapFB: return {f.se, f.sw, f.ne, f.nw, f.x};
    case Sym::rot3:
        return {mobius(f.ne, Mobius::f), mobius(f.sw, Mobius::f), mobius(f.nw, Mobius::f), mobius(f.se, Mobius::f),
                fx(Mobius::g)};
    case Sym::mirror:
        return {reciprocal(f.ne), reciprocal(f.se), reciprocal(f.nw), reciprocal(f.sw), fx(Mobius::reciprocal)};
    }
    throw std::logic_error("unknown symmetry");
}

P5Filling rot3_ne(const P5Filling& f)
{
    return symmetry(symmetry(symmetry(f, Sym::swapTB), Sym::rot3), Sym::swapTB);
}

namespace {

struct Pair {
    ExtRational a, b;
};

// Position pairs: line 0 is {NW,NE} / {SW,SE}, line 1 {NW,SW} / {NE,SE},
// line 2 {NW,SE} / {NE,SW}.
bool pair_in(const ExtRational& u, const ExtRational& v, const std::vector<Pair>& list)
{
    for (const auto& p : list)
        if ((u == p.a && v == p.b) || (u == p.b && v == p.a)) return true;
    return false;
}

bool line_hits(const P5Filling& f, int line, const std::vector<Pair>& list)
{
    switch (line) {
    case 0: return pair_in(f.nw, f.ne, list) || pair_in(f.sw, f.se, list);
    case 1: return pair_in(f.nw, f.sw, list) || pair_in(f.ne, f.se, list);
    default: return pair_in(f.nw, f.se, list) || pair_in(f.ne, f.sw, list);
    }
}

ExtRational R(i64 n, i64 d = 1) { return ExtRational(n, d); }

const std::vector<Pair> kNonhyp[3] = {
    {{R(-1), R(2)}, {R(1, 2), R(1, 2)}},
    {{R(-1), R(1, 2)}, {R(2), R(2)}},
    {{R(1, 2), R(2)}, {R(-1), R(-1)}},
};

// The third line's last pair is {2,2}: it is the rotation image of {-1,-1}
// from the first line and the reciprocal of the mirror list's {1/2,1/2}.
const std::vector<Pair> kP3[3] = {
    {{R(2), R(-2)}, {R(-1), R(3, 2)}, {R(1, 2), R(1, 3)}, {R(2), R(1, 2)}, {R(-1), R(-1)}},
    {{R(-1), R(1, 3)}, {R(1, 2), R(-2)}, {R(2), R(3, 2)}, {R(-1), R(2)}, {R(1, 2), R(1, 2)}},
    {{R(1, 2), R(3, 2)}, {R(2), R(1, 3)}, {R(-1), R(-2)}, {R(1, 2), R(-1)}, {R(2), R(2)}},
};

const std::vector<Pair> kMirrorP3[3] = {
    {{R(-1), R(3)}, {R(2), R(-1, 2)}, {R(1, 2), R(2, 3)}, {R(-1), R(1, 2)}, {R(2), R(2)}},
    {{R(1, 2), R(-1, 2)}, {R(-1), R(2, 3)}, {R(2), R(3)}, {R(1, 2), R(2)}, {R(-1), R(-1)}},
    {{R(2), R(2, 3)}, {R(1, 2), R(3)}, {R(-1), R(-1, 2)}, {R(2), R(-1)}, {R(1, 2), R(1, 2)}},
};

bool degenerate(const ExtRational& v) { return v.is_inf() || v.num() == 0 || v == ExtRational(1); }

} // namespace

bool is_nonhyperbolic(const P5Filling& f)
{
    if (degenerate(f.nw) || degenerate(f.ne) || degenerate(f.sw) || degenerate(f.se)) return true;
    for (int line = 0; line < 3; ++line)
        if (line_hits(f, line, kNonhyp[line])) return true;
    return false;
}

P3Factor factors_through_P3(const P5Filling& f)
{
    for (int line = 0; line < 3; ++line)
        if (line_hits(f, line, kP3[line])) return P3Factor::P3;
    for (int line = 0; line < 3; ++line)
        if (line_hits(f, line, kMirrorP3[line])) return P3Factor::mirrorP3;
    return P3Factor::no;
}

bool simplifies(const P5Filling& f) { return is_nonhyperbolic(f) || factors_through_P3(f) != P3Factor::no; }

std::string row_name(Row r)
{
    switch (r) {
    case Row::WxNW: return "WxNW";
    case Row::WxSW: return "WxSW";
    case Row::ExNE: return "ExNE";
    case Row::ExSE: return "ExSE";
    case Row::NxNW: return "NxNW";
    case Row::NxNE: return "NxNE";
    case Row::FxNE: return "FxNE";
    case Row::FxSW: return "FxSW";
    }
    return "?";
}

ExtRational row_filling(Row r)
{
    switch (r) {
    case Row::NxNW:
    case Row::NxNE: return kInf;
    case Row::FxNE:
    case Row::FxSW: return ExtRational(-1);
    default: return ExtRational(0);
    }
}

namespace {

// v = [0,h] = -1/h; inf gives h = 0.
std::optional<i64> as_zero_h(const ExtRational& v)
{
    if (!is_reciprocal_of_integer(v)) return std::nullopt;
    if (v.is_inf()) return 0;
    return -v.num() * v.den();
}

// v = [1,m] = 1 - 1/m; inf gives m = 0.
std::optional<i64> as_one_m(const ExtRational& v)
{
    ExtRational m = mobius(v, Mobius::f);
    if (!m.is_integer()) return std::nullopt;
    return m.num();
}

ExtRational cf2(i64 a, i64 b, const ExtRational& tail)
{
    const i64 c[] = {a, b};
    return cf_eval(c, tail);
}

ExtRational cf1(i64 a, const ExtRational& tail)
{
    const i64 c[] = {a};
    return cf_eval(c, tail);
}

MontesinosLink west_east(i64 h, const ExtRational& inner, const ExtRational& b, const ExtRational& c)
{
    return {{cf2(-1, h, inner), b, c}};
}

MontesinosLink north(i64 n, const ExtRational& other, const ExtRational& b, const ExtRational& c)
{
    return {{cf1(1, shift(other, n)), cf1(0, b), cf1(0, c)}};
}

MontesinosLink front(const ExtRational& a, i64 m, const ExtRational& b, const ExtRational& c)
{
    return {{cf1(1, a), cf2(m, 1, b), shift(c, -1)}};
}

} // namespace

std::optional<MontesinosLink> chart_row(const P5Filling& f, Row r)
{
    switch (r) {
    case Row::WxNW:
        if (auto h = as_zero_h(f.nw)) return west_east(*h, f.sw, f.ne, f.se);
        break;
    case Row::WxSW:
        if (auto k = as_zero_h(f.sw)) return west_east(*k, f.nw, f.se, f.ne);
        break;
    case Row::ExNE:
        if (auto m = as_zero_h(f.ne)) return west_east(*m, f.se, f.nw, f.sw);
        break;
    case Row::ExSE:
        if (auto p = as_zero_h(f.se)) return west_east(*p, f.ne, f.sw, f.nw);
        break;
    case Row::NxNW:
        if (f.nw.is_integer()) return north(f.nw.num(), f.ne, f.sw, f.se);
        break;
    case Row::NxNE:
        if (f.ne.is_integer()) return north(f.ne.num(), f.nw, f.se, f.sw);
        break;
    case Row::FxNE:
        if (auto m = as_one_m(f.ne)) return front(f.nw, *m, f.sw, f.se);
        break;
    case Row::FxSW:
        if (auto k = as_one_m(f.sw)) return front(f.se, *k, f.ne, f.nw);
        break;
    }
    return std::nullopt;
}

namespace {

constexpr Sym kKlein[] = {Sym::identity, Sym::swapLR, Sym::swapTB, Sym::swapFB};

std::vector<Row> rows_at(const ExtRational& x)
{
    if (x.is_inf()) return {Row::NxNW, Row::NxNE};
    if (x == ExtRational(-1)) return {Row::FxNE, Row::FxSW};
    if (x == ExtRational(0)) return {Row::WxNW, Row::WxSW, Row::ExNE, Row::ExSE};
    throw std::invalid_argument("x must be 0, inf or -1");
}

} // namespace

std::vector<Presentation> montesinos_presentations(const P5Filling& f, const ExtRational& x)
{
    std::vector<Presentation> out;
    const auto rows = rows_at(x);
    for (Sym s : kKlein) {
        P5Filling g = symmetry(f, s);
        for (Row r : rows)
            if (auto q = chart_row(g, r)) out.push_back({s, r, std::move(*q)});
    }
    return out;
}

bool two_bridge_necessary(const P5Filling& f, const ExtRational& x)
{
    const auto rows = rows_at(x);
    for (Sym s : kKlein) {
        P5Filling g = symmetry(f, s);
        for (Row r : rows) {
            auto q = chart_row(g, r);
            if (q && montesinos_is_two_bridge(*q)) return true;
        }
    }
    return false;
}

const std::array<CaseTriple, 16>& case_triples()
{
    static const std::array<CaseTriple, 16> cases = [] {
        std::array<CaseTriple, 16> c{};
        for (int i = 0; i < 16; ++i) {
            Row we = i < 4 ? Row::WxNW : i < 8 ? Row::WxSW : i < 12 ? Row::ExNE : Row::ExSE;
            Row n = (i % 4) < 2 ? Row::NxNW : Row::NxNE;
            Row fr = i % 2 == 0 ? Row::FxNE : Row::FxSW;
            c[static_cast<std::size_t>(i)] = {we, n, fr};
        }
        return c;
    }();
    return cases;
}

int case_of_rows(Row a, Row b, Row c)
{
    std::array<Row, 3> want{a, b, c};
    std::sort(want.begin(), want.end());
    const auto& cs = case_triples();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::array<Row, 3> have{cs[i].we, cs[i].n, cs[i].f};
        std::sort(have.begin(), have.end());
        if (have == want) return static_cast<int>(i) + 1;
    }
    return 0;
}

Row permute_row_se(Row r)
{
    switch (r) {
    case Row::WxSW: return Row::FxNE;
    case Row::FxNE: return Row::NxNW;
    case Row::NxNW: return Row::WxSW;
    case Row::WxNW: return Row::FxSW;
    case Row::FxSW: return Row::NxNE;
    case Row::NxNE: return Row::WxNW;
    default: return r;
    }
}

Row permute_row_ne(Row r)
{
    switch (r) {
    case Row::ExSE: return Row::FxSW;
    case Row::FxSW: return Row::NxNW;
    case Row::NxNW: return Row::ExSE;
    case Row::ExNE: return Row::FxNE;
    case Row::FxNE: return Row::NxNE;
    case Row::NxNE: return Row::ExNE;
    default: return r;
    }
}

std::vector<ExtRational> slopes_up_to(i64 bound)
{
    std::vector<ExtRational> out{kInf, ExtRational(0)};
    struct Node {
        i64 a, b, c, d; // left bound a/b, right bound c/d
    };
    std::deque<Node> queue{{0, 1, 1, 0}};
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        const i64 p = n.a + n.c, q = n.b + n.d;
        if (std::max(p, q) > bound) continue;
        out.emplace_back(p, q);
        out.emplace_back(-p, q);
        queue.push_back({n.a, n.b, p, q});
        queue.push_back({p, q, n.c, n.d});
    }
    return out;
}

} // namespace sf
