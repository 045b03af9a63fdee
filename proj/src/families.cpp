#include "surgeryforge/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "surgeryforge/pentangle.hpp"

namespace sf {

namespace {

using i128 = __int128;

i64 narrow(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("family formula overflows int64");
    return static_cast<i64>(v);
}

LensSpace lens128(i128 p, i128 q) { return lens_normalize(narrow(p), narrow(q)); }

bool in(const ExtRational& r, std::initializer_list<ExtRational> xs)
{
    return std::find(xs.begin(), xs.end(), r) != xs.end();
}

ExtRational inf() { return ExtRational::infinity(); }

// a - 1/m
ExtRational minus_inv(i64 a, i64 m) { return ExtRational(a) - reciprocal(ExtRational(m)); }

std::string params_str(Family f, const FamilyParams& pr)
{
    switch (f) {
    case Family::X1:
    case Family::X2: return family_name(f) + "(" + std::to_string(pr.m) + ", " + pr.r.str() + ")";
    case Family::B: return "B(" + pr.r.str() + ")";
    default: return family_name(f) + "(" + std::to_string(pr.m) + ", " + std::to_string(pr.n) + ")";
    }
}

} // namespace

std::string family_name(Family f)
{
    switch (f) {
    case Family::X0: return "X0";
    case Family::X1: return "X1";
    case Family::X2: return "X2";
    case Family::X3: return "X3";
    case Family::A: return "A";
    case Family::B: return "B";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    for (Family f : {Family::X0, Family::X1, Family::X2, Family::X3, Family::A, Family::B})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown family: " + s);
}

std::optional<std::string> family_exclusion(Family f, const FamilyParams& pr)
{
    const i64 m = pr.m, n = pr.n;
    const ExtRational& r = pr.r;
    switch (f) {
    case Family::X0:
        if (n >= 0 && n <= 3) return "X0 needs n not in {0,1,2,3}";
        if (m == -1 && (n == 4 || n == 5)) return "X0 excludes (m,n) = (-1,4), (-1,5)";
        if (m == 0) return "X0 needs m != 0";
        return std::nullopt;
    case Family::X1:
        if (m == 0 || m == 1) return "X1 needs m not in {0,1}";
        if (in(r, {0, 1, 2, 3, inf()})) return "X1 needs p/q not in {0,1,2,3,inf}";
        return std::nullopt;
    case Family::X2:
        if (m >= -1 && m <= 1) return "X2 needs m not in {-1,0,1}";
        if (in(r, {0, 1, 2, 3, inf()})) return "X2 needs p/q not in {0,1,2,3,inf}";
        return std::nullopt;
    case Family::X3:
        if ((m >= -1 && m <= 1) || (n >= -1 && n <= 1)) return "X3 needs m, n not in {-1,0,1}";
        return std::nullopt;
    case Family::A:
        if (m >= -1 && m <= 1) return "A needs m not in {-1,0,1}";
        if (n == 0 || n == 1) return "A needs n not in {0,1}";
        return std::nullopt;
    case Family::B:
        if (in(r, {0, 1, ExtRational(3, 2), 2, 3, inf()})) return "B needs p/q not in {0,1,3/2,2,3,inf}";
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<ExtRational> family_slots(Family f)
{
    switch (f) {
    case Family::X0: return {0, inf()};
    case Family::X1: return {1, inf()};
    case Family::X2: return {2, inf()};
    case Family::X3: return {3, inf()};
    case Family::A:
    case Family::B: return {1, 2, inf()};
    }
    return {};
}

std::pair<ExtRational, ExtRational> family_slopes(Family f, const FamilyParams& pr)
{
    if (auto why = family_exclusion(f, pr)) throw ExcludedParameter(*why);
    ExtRational a, b;
    switch (f) {
    case Family::X0: a = pr.n, b = minus_inv(4 - pr.n, pr.m); break;
    case Family::X1: a = minus_inv(3, pr.m), b = pr.r; break;
    case Family::X2: a = minus_inv(2, pr.m), b = pr.r; break;
    case Family::X3: a = minus_inv(1, pr.m), b = minus_inv(1, pr.n); break;
    case Family::A: a = minus_inv(2, pr.m), b = minus_inv(3, pr.n); break;
    case Family::B: a = ExtRational(5, 2), b = pr.r; break;
    }
    if (b < a) std::swap(a, b);
    return {a, b};
}

LensSpace family_lens(Family f, const FamilyParams& pr, const ExtRational& slot)
{
    if (auto why = family_exclusion(f, pr)) throw ExcludedParameter(*why);
    const auto slots = family_slots(f);
    if (std::find(slots.begin(), slots.end(), slot) == slots.end())
        throw std::invalid_argument(family_name(f) + " has no lens filling at slope " + slot.str());
    const i128 m = pr.m, n = pr.n, p = pr.r.num(), q = pr.r.den();
    const bool at_inf = slot.is_inf();
    switch (f) {
    case Family::X0:
        if (at_inf) return lens128(-n * (1 - m * (4 - n)) - m, 1 - m * (4 - n));
        return lens128(6 * m - 1, 2 * m - 1);
    case Family::X1:
        if (at_inf) return lens128(-m * (3 * p - q) + p, 3 * p - q);
        return lens128(2 * m * (p - 3 * q) - p + q, m * (p - 3 * q) - q);
    case Family::X2:
        if (at_inf) return lens128(-m * (2 * p - q) + p, 2 * p - q);
        return lens128(3 * m * (p - 2 * q) - 2 * p + q, m * (p - 2 * q) - p + q);
    case Family::X3:
        if (at_inf) return lens128(m + n - 1, -1);
        return lens128((1 + 2 * m) * (1 + 2 * n) - 4, m * (1 + 2 * n) - 2);
    case Family::A:
        if (at_inf) return lens128(5 * m * n - 2 * m - 3 * n + 1, 3 - 5 * m);
        if (slot == ExtRational(1)) return lens128(2 * m * n + m + 2 * n - 1, m * n + m + n);
        return lens128(3 * m * n - 3 * m - 5 * n + 2, m * n - m - 2 * n + 1);
    case Family::B:
        if (at_inf) return lens128(5 * p - 2 * q, 2 * p - q);
        if (slot == ExtRational(1)) return lens128(-3 * p + 11 * q, 2 * p - 7 * q);
        return lens128(8 * p - 13 * q, 3 * p - 5 * q);
    }
    throw std::logic_error("family_lens");
}

LensSpace x1_slot1_printed(i64 m, const ExtRational& r)
{
    FamilyParams pr{m, 0, r};
    if (auto why = family_exclusion(Family::X1, pr)) throw ExcludedParameter(*why);
    const i128 M = m, p = r.num(), q = r.den();
    return lens128(2 * M * (p - 3 * q) + p - q, M * (p - 3 * q) - q);
}

bool is_exceptional_pair(const ExtRational& a, const ExtRational& b)
{
    auto is = [&](const ExtRational& x, const ExtRational& y) { return (a == x && b == y) || (a == y && b == x); };
    return is(-1, -1) || is(4, ExtRational(1, 2)) || is(ExtRational(3, 2), ExtRational(5, 2));
}

std::string relation_name(Relation r)
{
    switch (r) {
    case Relation::oriented: return "oriented";
    case Relation::mirror: return "mirror";
    case Relation::different: return "different";
    }
    return "?";
}

Relation lens_relation(const LensSpace& a, const LensSpace& b)
{
    if (homeo_oriented(a, b)) return Relation::oriented;
    if (homeo_unoriented(a, b)) return Relation::mirror;
    return Relation::different;
}

// ---------------------------------------------------------------------------

namespace {

struct Instance {
    Family f;
    FamilyParams pr;
};

using SlopeKey = std::pair<ExtRational, ExtRational>;

Comparison compare(std::string what, const LensSpace& a, const LensSpace& b)
{
    return {std::move(what), a, b, lens_relation(a, b)};
}

bool valid(Family f, const FamilyParams& pr) { return !family_exclusion(f, pr); }

// Integer m with x = -1/m, if any.
std::optional<i64> neg_inv_int(const ExtRational& x)
{
    if (x.is_inf() || x.num() == 0 || (x.num() != 1 && x.num() != -1)) return std::nullopt;
    return -x.num() * x.den();
}

// Integer m with x = a - 1/m, if any.
std::optional<i64> minus_inv_int(const ExtRational& x, i64 a) { return neg_inv_int(x - ExtRational(a)); }

// Closed-form label of a coincidence between adjacent families.
std::string classify(Family f1, const SlopeKey& key)
{
    const auto& [s, t] = key;
    auto either = [&](auto pred) { return pred(s, t) || pred(t, s); };
    if (f1 == Family::X0) {
        bool hit = either([](const ExtRational& x, const ExtRational& y) {
            auto m = neg_inv_int(y);
            return x == ExtRational(4) && m && *m != 0 && *m != -1 && *m != -2;
        });
        return hit ? "1a" : "";
    }
    if (f1 == Family::X1) {
        if (either([](const ExtRational& x, const ExtRational& y) {
                return x == ExtRational(5, 2) && valid(Family::B, {0, 0, y});
            }))
            return "2a";
        if (either([](const ExtRational& x, const ExtRational& y) {
                auto m = minus_inv_int(x, 2), n = minus_inv_int(y, 3);
                return m && n && valid(Family::A, {*m, *n, 0});
            }))
            return "2b";
        return "";
    }
    bool hit = either([](const ExtRational& x, const ExtRational& y) {
        auto n = minus_inv_int(y, 1);
        return x == ExtRational(3, 2) && n && (*n < -1 || *n > 1);
    });
    return hit ? "3a" : "";
}

void add_checks(Coincidence& c)
{
    const ExtRational I = inf();
    auto L = [](Family f, const FamilyParams& pr, const ExtRational& s) { return family_lens(f, pr, s); };
    c.checks.push_back(compare(family_name(c.f1) + "(inf) vs " + family_name(c.f2) + "(inf)", L(c.f1, c.p1, I),
                               L(c.f2, c.p2, I)));
    if (c.case_label == "2a") {
        FamilyParams b{0, 0, c.s1 == ExtRational(5, 2) ? c.s2 : c.s1};
        c.checks.push_back(compare("B(1) vs X1(1)", L(Family::B, b, 1), L(Family::X1, c.p1, 1)));
        c.checks.push_back(compare("B(2) vs X2(2)", L(Family::B, b, 2), L(Family::X2, c.p2, 2)));
        c.checks.push_back(compare("B(inf) vs X1(inf)", L(Family::B, b, I), L(Family::X1, c.p1, I)));
    } else if (c.case_label == "2b") {
        // X1(n, 2-1/m) = X2(m, 3-1/n) = A(m, n)
        FamilyParams a{c.p2.m, c.p1.m, 0};
        c.checks.push_back(compare("A(1) vs X1(1)", L(Family::A, a, 1), L(Family::X1, c.p1, 1)));
        c.checks.push_back(compare("A(2) vs X2(2)", L(Family::A, a, 2), L(Family::X2, c.p2, 2)));
        c.checks.push_back(compare("A(inf) vs X1(inf)", L(Family::A, a, I), L(Family::X1, c.p1, I)));
    }
}

std::string coincidence_str(const Coincidence& c)
{
    return c.case_label + ": " + params_str(c.f1, c.p1) + " = " + params_str(c.f2, c.p2) + " at {" + c.s1.str() +
           ", " + c.s2.str() + "}";
}

} // namespace

IntersectionReport verify_three_filling_intersections(i64 bound)
{
    if (bound < 2) throw std::invalid_argument("bound must be >= 2");
    IntersectionReport rep;
    rep.bound = bound;
    const auto slopes = slopes_up_to(bound);

    const Family fams[] = {Family::X0, Family::X1, Family::X2, Family::X3};
    std::map<Family, std::map<SlopeKey, std::vector<FamilyParams>>> by_key;
    auto add = [&](Family f, const FamilyParams& pr) {
        if (!valid(f, pr)) return;
        auto key = family_slopes(f, pr);
        if (is_exceptional_pair(key.first, key.second)) {
            ++rep.excluded_exceptional;
            return;
        }
        by_key[f][key].push_back(pr);
        ++rep.instances[family_name(f)];
    };
    for (i64 m = -bound; m <= bound; ++m) {
        for (i64 n = -bound; n <= bound; ++n) {
            add(Family::X0, {m, n, 0});
            add(Family::X3, {m, n, 0});
        }
        for (const auto& r : slopes) {
            add(Family::X1, {m, 0, r});
            add(Family::X2, {m, 0, r});
        }
    }

    std::set<std::tuple<int, SlopeKey>> found;
    for (int i = 0; i + 1 < 4; ++i) {
        const Family f1 = fams[i], f2 = fams[i + 1];
        for (const auto& [key, ps1] : by_key[f1]) {
            auto it = by_key[f2].find(key);
            if (it == by_key[f2].end()) continue;
            found.insert({i, key});
            for (const auto& p1 : ps1) {
                for (const auto& p2 : it->second) {
                    Coincidence c{classify(f1, key), f1, f2, p1, p2, key.first, key.second, {}};
                    if (c.case_label.empty()) {
                        c.case_label = "unexplained";
                        rep.unexplained.push_back(coincidence_str(c));
                    }
                    add_checks(c);
                    for (const auto& chk : c.checks)
                        if (chk.relation == Relation::different)
                            rep.mismatches.push_back(coincidence_str(c) + ": " + chk.what + " " + chk.left.str() +
                                                     " vs " + chk.right.str());
                    rep.coincidences.push_back(std::move(c));
                }
            }
        }
    }

    // Predicted coincidences whose witnesses both lie in the sweep.
    auto present = [&](Family f, const FamilyParams& pr) {
        if (!valid(f, pr)) return false;
        auto key = family_slopes(f, pr);
        auto it = by_key[f].find(key);
        if (it == by_key[f].end()) return false;
        return std::any_of(it->second.begin(), it->second.end(), [&](const FamilyParams& q) {
            return q.m == pr.m && q.n == pr.n && q.r == pr.r;
        });
    };
    auto expect = [&](int i, Family f1, const FamilyParams& p1, Family f2, const FamilyParams& p2,
                      const std::string& label) {
        if (!present(f1, p1) || !present(f2, p2)) return;
        auto key = family_slopes(f1, p1);
        if (key != family_slopes(f2, p2) || !found.count({i, key}))
            rep.missing.push_back(label + ": " + params_str(f1, p1) + " = " + params_str(f2, p2));
    };
    for (i64 m = -bound; m <= bound; ++m) {
        if (m != 0 && m != -1 && m != -2)
            expect(0, Family::X0, {m, 4, 0}, Family::X1, {-1, 0, ExtRational(-1, m)}, "1a");
        for (const auto& r : slopes)
            if (valid(Family::B, {0, 0, r})) expect(1, Family::X1, {2, 0, r}, Family::X2, {-2, 0, r}, "2a");
        for (i64 n = -bound; n <= bound; ++n) {
            if (valid(Family::A, {m, n, 0}))
                expect(1, Family::X1, {n, 0, minus_inv(2, m)}, Family::X2, {m, 0, minus_inv(3, n)}, "2b");
        }
        if (m < -1 || m > 1) expect(2, Family::X2, {2, 0, minus_inv(1, m)}, Family::X3, {-2, m, 0}, "3a");
    }
    return rep;
}

Prop15Report prop15_consistency(i64 bound)
{
    if (bound < 2) throw std::invalid_argument("bound must be >= 2");
    Prop15Report rep;
    rep.bound = bound;
    const ExtRational I = inf();
    auto push = [&](std::string what, const LensSpace& a, const LensSpace& b) {
        auto c = compare(std::move(what), a, b);
        if (c.relation == Relation::different) rep.failures.push_back(c.what + ": " + a.str() + " vs " + b.str());
        rep.comparisons.push_back(std::move(c));
    };
    for (i64 n = -bound; n <= bound; ++n) {
        FamilyParams a{2, n, 0}, x0{-n, 4, 0}, x1{-1, 0, ExtRational(1, n == 0 ? 1 : n)};
        if (!valid(Family::A, a) || !valid(Family::X0, x0) || !valid(Family::X1, x1)) continue;
        const std::string tag = "A(2," + std::to_string(n) + ")";
        push(tag + "(1) vs X0(0)", family_lens(Family::A, a, 1), family_lens(Family::X0, x0, 0));
        push(tag + "(2) vs X0(inf)", family_lens(Family::A, a, 2), family_lens(Family::X0, x0, I));
        push(tag + "(inf) vs X1(1)", family_lens(Family::A, a, I), family_lens(Family::X1, x1, 1));
    }
    for (i64 m = -bound; m <= bound; ++m) {
        if (m == 0) continue;
        FamilyParams a{m, -1, 0}, x2{2, 0, ExtRational(m + 1, m)}, x3{-2, -m, 0};
        if (!valid(Family::A, a) || !valid(Family::X2, x2) || !valid(Family::X3, x3)) continue;
        const std::string tag = "A(" + std::to_string(m) + ",-1)";
        push(tag + "(1) vs X2(inf)", family_lens(Family::A, a, 1), family_lens(Family::X2, x2, I));
        push(tag + "(2) vs X3(3)", family_lens(Family::A, a, 2), family_lens(Family::X3, x3, 3));
        push(tag + "(inf) vs X2(2)", family_lens(Family::A, a, I), family_lens(Family::X2, x2, 2));
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::pair<OptKnot, OptKnot> optsurg_catalog(int family, i64 k, std::optional<i64> l)
{
    auto s = [](i64 v) { return std::to_string(v); };
    auto frac = [&](i64 base, i64 v) { return s(base) + "+1/" + s(v); };
    const i128 K = k;
    switch (family) {
    case 1:
    case 2:
    case 3: {
        if (!l) throw std::invalid_argument("families 1-3 take k and l");
        const i128 L = *l;
        static const i64 top[] = {0, -1, -2, -3}, shift[] = {0, -6, -4, -3};
        auto lens = [&](i128 x) -> LensSpace {
            if (family == 1) return lens128(6 * x - 1, 2 * x - 1);
            if (family == 2) return lens128(8 * x - 2, 2 * x - 1);
            return lens128(9 * x - 3, 3 * x - 2);
        };
        const std::string up = "K^{" + s(top[family]) + "}_{";
        return {{up + frac(shift[family], k) + "}", lens(K)}, {up + frac(shift[family], *l) + "}", lens(L)}};
    }
    case 4:
        if (k == 0) throw ExcludedParameter("family 4 needs k != 0");
        return {{"K^{" + frac(-3, k) + "}_{-3}", lens128(9 * K - 3, 3 * K - 2)},
                {"K^{" + frac(-3, k) + "}_{inf}", lens128(3 * K - 1, -K)}};
    case 5:
        return {{"K^{" + frac(-4, k) + "}_{-2}", lens128(8 * K - 2, 2 * K - 1)},
                {"K^{" + frac(-4, k) + "}_{inf}", lens128(4 * K - 1, -K)}};
    case 6:
        return {{"K^{" + frac(-6, k) + "}_{-1}", lens128(6 * K - 1, 2 * K - 1)},
                {"K^{" + frac(-6, k) + "}_{inf}", lens128(6 * K - 1, -K)}};
    default: throw std::invalid_argument("optsurg family must be 1..6");
    }
}

} // namespace sf
