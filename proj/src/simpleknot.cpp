#include "surgeryforge/simpleknot.hpp"

#include <algorithm>
#include <stdexcept>

namespace sf {

SimpleKnot::SimpleKnot(i64 p_, i64 q_, i64 k_) : p(p_), q(q_), k(k_)
{
    if (p < 2) throw std::invalid_argument("simple knot needs p >= 2");
    if (gcd(p, q) != 1) throw std::invalid_argument("simple knot needs gcd(p,q) = 1");
    q = mod(q, p);
    k = mod(k, p);
    if (k == 0) throw std::invalid_argument("simple knot needs k != 0 mod p");
}

std::string SimpleKnot::str() const
{
    return "K(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
}

std::vector<i64> alexander_set_scaled(const SimpleKnot& K)
{
    const i64 p = K.p;
    const i64 qi = inverse_mod(K.q, p);
    // p * A_i, starting from A_0 = 0.
    std::vector<i64> a(static_cast<std::size_t>(p));
    i64 cur = 0;
    for (i64 i = 0; i < p; ++i) {
        a[static_cast<std::size_t>(i)] = cur;
        i64 d = mod(i * qi, p) - mod((i + K.k) * qi, p);
        cur -= d;
    }
    if (cur != 0) throw std::logic_error("Alexander gradings do not telescope");
    auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    const i64 shift = *lo + *hi;
    for (auto& v : a) v = 2 * v - shift;
    return a;
}

std::vector<ExtRational> alexander_set(const SimpleKnot& K)
{
    std::vector<ExtRational> out;
    for (i64 v : alexander_set_scaled(K)) out.emplace_back(v, 2 * K.p);
    return out;
}

i64 euler_char(const SimpleKnot& K)
{
    auto a = alexander_set_scaled(K);
    // max A = span / (2p), so chi = (p/g) (1 - span/p) = (p - span) / g.
    const i64 span = *std::max_element(a.begin(), a.end());
    const i64 g = gcd(K.p, K.k);
    const i64 top = K.p - span;
    if (top % g != 0) throw std::logic_error("non-integral Euler characteristic for " + K.str());
    return top / g;
}

i64 genus_primitive(const SimpleKnot& K)
{
    if (gcd(K.p, K.k) != 1) throw std::invalid_argument(K.str() + " is not primitive");
    i64 chi = euler_char(K);
    if (chi % 2 == 0) throw std::invalid_argument(K.str() + " has even Euler characteristic");
    return (1 - chi) / 2;
}

bool equivalent(const SimpleKnot& a, const SimpleKnot& b)
{
    if (a.p != b.p) return false;
    const i64 p = a.p;
    auto pm = [p](i64 x, i64 y) { return mod(x - y, p) == 0 || mod(x + y, p) == 0; };
    if (a.q == b.q && pm(a.k, b.k)) return true;
    if (mod(a.q * b.q, p) == 1 && pm(mod(b.q * a.k, p), b.k)) return true;
    return false;
}

std::vector<StarSolution> star_solutions(i64 p, int eps)
{
    if (p < 1) throw std::invalid_argument("star_solutions needs p >= 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    std::vector<StarSolution> out;
    for (i64 k = 1; k < p; ++k) {
        if (mod(k * k + eps * (k + 1), p) != 0) continue;
        out.push_back({k, mod(-k * k, p), std::min(k, p - k)});
    }
    return out;
}

std::vector<SimpleKnot> knots_with_genus(const LensSpace& l, i64 g)
{
    std::vector<SimpleKnot> out;
    if (l.p < 2) return out;
    for (i64 k = 1; 2 * k <= l.p; ++k) {
        if (gcd(l.p, k) != 1) continue;
        SimpleKnot K(l.p, l.q, k);
        i64 chi = euler_char(K);
        if (chi % 2 != 0 && (1 - chi) / 2 == g) out.push_back(K);
    }
    return out;
}

} // namespace sf
