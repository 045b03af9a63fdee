#include "surgeryforge/lens.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace sf {

std::string LensSpace::str() const
{
    if (is_s3()) return "S3";
    if (is_s1s2()) return "S1xS2";
    return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

LensSpace LensSpace::parse(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s == "S3") return {1, 0};
    if (s == "S1xS2") return {0, 1};
    static const std::regex re(R"(L\((-?\d+),(-?\d+)\))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad lens space '" + s + "'");
    return lens_normalize(std::stoll(m[1]), std::stoll(m[2]));
}

LensSpace lens_normalize(i64 p, i64 q)
{
    if (p < 0) {
        p = ck::neg(p);
        q = ck::neg(q);
    }
    if (gcd(p, q) != 1)
        throw std::invalid_argument("L(" + std::to_string(p) + "," + std::to_string(q) + "): gcd(p,q) != 1");
    if (p == 0) return {0, 1};
    if (p == 1) return {1, 0};
    return {p, mod(q, p)};
}

bool homeo_oriented(const LensSpace& a, const LensSpace& b)
{
    if (a.p != b.p) return false;
    if (a.p <= 1 || a.q == b.q) return true;
    return mod(ck::mul(a.q, b.q), a.p) == 1;
}

LensSpace mirror(const LensSpace& l) { return lens_normalize(l.p, ck::neg(l.q)); }

bool homeo_unoriented(const LensSpace& a, const LensSpace& b)
{
    return homeo_oriented(a, b) || homeo_oriented(a, mirror(b));
}

LensSpace from_surgery(const ExtRational& r)
{
    if (r.is_inf()) return {1, 0};
    return lens_normalize(ck::neg(r.num()), r.den());
}

LensSpace lens_of_value(const ExtRational& x)
{
    if (x.is_inf()) return {1, 0};
    return lens_normalize(x.num(), x.den());
}

LensSpace oriented_key(const LensSpace& l)
{
    if (l.p <= 1) return l;
    return {l.p, std::min(l.q, inverse_mod(l.q, l.p))};
}

} // namespace sf
