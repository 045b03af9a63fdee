#include "surgeryforge/tangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sf {

bool is_reciprocal_of_integer(const ExtRational& x) { return x.num() == 1 || x.num() == -1; }

bool sum_is_rational(const ExtRational& a, const ExtRational& b)
{
    return is_reciprocal_of_integer(a) || is_reciprocal_of_integer(b);
}

bool montesinos_is_two_bridge(const MontesinosLink& q)
{
    return std::any_of(q.factors.begin(), q.factors.end(), is_reciprocal_of_integer);
}

std::string MontesinosLink::str() const
{
    std::string s = "Q(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].str();
    }
    return s + ")";
}

MontesinosLink MontesinosLink::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.size() < 3 || s.rfind("Q(", 0) != 0 || s.back() != ')')
        throw std::invalid_argument("Montesinos link must look like Q(a/b,c/d,e/f)");
    s = s.substr(2, s.size() - 3);
    MontesinosLink q;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        q.factors.push_back(ExtRational::parse(s.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return q;
}

std::vector<ExtRational> MontesinosLink::fingerprint() const
{
    auto f = factors;
    std::sort(f.begin(), f.end());
    return f;
}

} // namespace sf
