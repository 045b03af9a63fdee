#include "surgeryforge/rational.hpp"

#include <boost/integer/mod_inverse.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace sf {

i64 inverse_mod(i64 a, i64 m)
{
    if (m < 2) throw std::invalid_argument("inverse_mod: modulus must be >= 2");
    auto inv = boost::integer::mod_inverse(mod(a, m), m);
    if (inv == 0) throw std::invalid_argument("inverse_mod: not invertible");
    return inv;
}

ExtRational::ExtRational(i64 n, i64 d)
{
    if (n == 0 && d == 0) throw std::invalid_argument("0/0 is not a slope");
    if (d == 0) {
        num_ = 1;
        den_ = 0;
        return;
    }
    i64 g = gcd(n, d);
    n /= g;
    d /= g;
    if (d < 0) {
        n = ck::neg(n);
        d = ck::neg(d);
    }
    num_ = n;
    den_ = d;
}

i64 ExtRational::height() const { return std::max(ck::abs(num_), den_); }

std::string ExtRational::str() const
{
    if (is_inf()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

i64 parse_int(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

ExtRational ExtRational::parse(std::string_view text)
{
    auto s = trim(text);
    if (s == "inf" || s == "oo" || s == "-inf" || s == "\xe2\x88\x9e") return infinity();
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return ExtRational(parse_int(s));
    return ExtRational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& o) const
{
    if (is_inf() || o.is_inf()) return (is_inf() ? 1 : 0) <=> (o.is_inf() ? 1 : 0);
    return ck::mul(num_, o.den_) <=> ck::mul(o.num_, den_);
}

ExtRational operator-(const ExtRational& a)
{
    if (a.is_inf()) return a;
    return ExtRational::from_reduced(ck::neg(a.num()), a.den());
}

ExtRational operator+(const ExtRational& a, const ExtRational& b)
{
    if (a.is_inf() && b.is_inf()) throw std::domain_error("inf + inf is undefined");
    if (a.is_inf() || b.is_inf()) return ExtRational::infinity();
    i64 g = gcd(a.den(), b.den());
    i64 n = ck::add(ck::mul(a.num(), b.den() / g), ck::mul(b.num(), a.den() / g));
    return ExtRational(n, ck::mul(a.den() / g, b.den()));
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

ExtRational operator*(const ExtRational& a, const ExtRational& b)
{
    if (a.is_inf() || b.is_inf()) {
        if ((!a.is_inf() && a.num() == 0) || (!b.is_inf() && b.num() == 0))
            throw std::domain_error("inf * 0 is undefined");
        return ExtRational::infinity();
    }
    i64 g1 = gcd(a.num(), b.den());
    i64 g2 = gcd(b.num(), a.den());
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return ExtRational(ck::mul(a.num() / g1, b.num() / g2), ck::mul(a.den() / g2, b.den() / g1));
}

ExtRational reciprocal(const ExtRational& a)
{
    if (a.is_inf()) return ExtRational(0);
    if (a.num() == 0) return ExtRational::infinity();
    return a.num() < 0 ? ExtRational::from_reduced(ck::neg(a.den()), ck::neg(a.num()))
                       : ExtRational::from_reduced(a.den(), a.num());
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) { return a * reciprocal(b); }

ExtRational Mat2::apply(const ExtRational& x) const
{
    i64 p = ck::add(ck::mul(a, x.num()), ck::mul(b, x.den()));
    i64 q = ck::add(ck::mul(c, x.num()), ck::mul(d, x.den()));
    return ExtRational(p, q);
}

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {ck::add(ck::mul(a, o.a), ck::mul(b, o.c)), ck::add(ck::mul(a, o.b), ck::mul(b, o.d)),
            ck::add(ck::mul(c, o.a), ck::mul(d, o.c)), ck::add(ck::mul(c, o.b), ck::mul(d, o.d))};
}

ExtRational cf_eval(std::span<const i64> coeffs, std::optional<ExtRational> tail)
{
    // Each step is (a -1; 1 0), determinant 1, so primitive vectors stay
    // primitive and no gcd is needed until the end.
    i64 p = 1, q = 0;
    if (tail) {
        p = tail->num();
        q = tail->den();
    }
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        i64 np = ck::sub(ck::mul(*it, p), q);
        q = p;
        p = np;
    }
    return ExtRational(p, q);
}

ExtRational cf_eval(const ContFrac& cf) { return cf_eval(cf.coeffs, cf.tail); }

std::vector<i64> cf_expand_norm(const ExtRational& x)
{
    if (x.is_inf()) return {};
    if (x.num() <= x.den()) throw std::invalid_argument("cf_expand_norm needs x > 1, got " + x.str());
    std::vector<i64> out;
    i64 p = x.num(), q = x.den();
    while (q != 0) {
        // a = ceil(p/q); next value q/(a q - p).
        i64 a = p / q + (p % q != 0 ? 1 : 0);
        out.push_back(a);
        i64 r = a * q - p;
        p = q;
        q = r;
    }
    return out;
}

ExtRational cf_solve_tail(std::span<const i64> prefix, i64 j)
{
    std::vector<i64> c;
    c.reserve(prefix.size() + 2);
    c.push_back(0);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) c.push_back(ck::neg(*it));
    c.push_back(j);
    return cf_eval(c);
}

ExtRational mobius(const ExtRational& x, Mobius m)
{
    switch (m) {
    case Mobius::reciprocal: return reciprocal(x);
    case Mobius::negate: return -x;
    case Mobius::f: return Mat2{0, 1, -1, 1}.apply(x);
    case Mobius::g: return Mat2{0, -1, 1, 1}.apply(x);
    }
    throw std::logic_error("unknown Mobius map");
}

ExtRational shift(const ExtRational& x, i64 n) { return Mat2{1, n, 0, 1}.apply(x); }

std::string ContFrac::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    if (tail) {
        if (!coeffs.empty()) s += ",";
        s += tail->str();
    }
    return s + "]";
}

ContFrac ContFrac::parse(std::string_view text)
{
    auto s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("continued fraction must look like [a1,...,an]");
    s = trim(s.substr(1, s.size() - 2));
    ContFrac cf;
    if (s.empty()) return cf;
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool last = i + 1 == parts.size();
        if (parts[i].find('/') != std::string_view::npos || parts[i] == "inf") {
            if (!last) throw std::invalid_argument("only the last entry may be non-integral");
            auto v = ExtRational::parse(parts[i]);
            if (v.is_integer()) cf.coeffs.push_back(v.num());
            else cf.tail = v;
        } else {
            cf.coeffs.push_back(parse_int(parts[i]));
        }
    }
    return cf;
}

} // namespace sf
