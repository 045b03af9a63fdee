#include "surgeryforge/normseq.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace sf {

SeqKind kind_of(const NormSeq& s)
{
    if (std::all_of(s.begin(), s.end(), [](i64 v) { return v >= 2; }) && !s.empty()) return SeqKind::norm;
    if (std::all_of(s.begin(), s.end(), [](i64 v) { return v >= 0; })) return SeqKind::weak;
    return SeqKind::raw;
}

RawSeq raw_from(const NormSeq& s)
{
    RawSeq r;
    r.reserve(s.size());
    for (i64 v : s) r.push_back({false, v});
    return r;
}

RawSeq parse_raw_seq(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("sequence must look like (a1,...,an)");
    s = s.substr(1, s.size() - 2);
    RawSeq out;
    if (s.empty()) return out;
    static const std::regex run_re(R"(2\^\[?(-?\d+)\]?)");
    static const std::regex int_re(R"([+-]?\d+)");
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::smatch m;
        if (std::regex_match(tok, m, run_re)) out.push_back({true, std::stoll(m[1])});
        else if (std::regex_match(tok, int_re)) out.push_back({false, std::stoll(tok)});
        else throw std::invalid_argument("bad sequence entry '" + tok + "'");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const NormSeq& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

std::string to_string(const RawSeq& s)
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i].run ? "2^[" + std::to_string(s[i].value) + "]" : std::to_string(s[i].value);
    }
    return out + ")";
}

ExtRational eval_raw(const RawSeq& s)
{
    ExtRational x = ExtRational::infinity();
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        i64 t = it->value;
        Mat2 m = it->run ? Mat2{t + 1, -t, t, 1 - t} : Mat2{t, -1, 1, 0};
        x = m.apply(x);
    }
    return x;
}

std::string Reduced::str() const
{
    switch (tag) {
    case SeqTag::s3: return "S3";
    case SeqTag::s1xs2: return "S1xS2";
    default: return to_string(seq);
    }
}

namespace {

enum class Rule { expand, drop, merge, fuse, run_alone, run_lead, run_trail, one_mid, one_lead, one_trail,
                  zero_mid, zero_lead, zero_trail };

struct Rewrite {
    Rule rule;
    std::size_t pos;
};

std::vector<Rewrite> applicable(const RawSeq& s)
{
    std::vector<Rewrite> out;
    const std::size_t n = s.size();
    auto val = [&](std::size_t i) { return i < n && !s[i].run; };
    for (std::size_t i = 0; i < n; ++i) {
        const i64 v = s[i].value;
        bool left = i > 0 && val(i - 1);
        bool right = val(i + 1);
        if (s[i].run) {
            if (v > 0) out.push_back({Rule::expand, i});
            if (v == 0) out.push_back({Rule::drop, i});
            if (i + 1 < n && s[i + 1].run && v + s[i + 1].value >= -1) out.push_back({Rule::merge, i});
            if (v == -1) {
                if (n == 1) out.push_back({Rule::run_alone, i});
                if (left && right) out.push_back({Rule::fuse, i});
                if (i == 0 && right) out.push_back({Rule::run_lead, i});
                if (i + 1 == n && left) out.push_back({Rule::run_trail, i});
            }
        } else if (n >= 2 && (v == 0 || v == 1)) {
            if (left && right) out.push_back({v ? Rule::one_mid : Rule::zero_mid, i});
            if (i == 0 && right) out.push_back({v ? Rule::one_lead : Rule::zero_lead, i});
            if (i + 1 == n && left) out.push_back({v ? Rule::one_trail : Rule::zero_trail, i});
        }
    }
    return out;
}

void apply_rewrite(RawSeq& s, const Rewrite& w)
{
    const std::size_t i = w.pos;
    auto at = s.begin() + static_cast<std::ptrdiff_t>(i);
    switch (w.rule) {
    case Rule::expand: {
        i64 t = s[i].value;
        s.erase(at);
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), static_cast<std::size_t>(t), SeqItem{false, 2});
        break;
    }
    case Rule::drop: s.erase(at); break;
    case Rule::merge:
        s[i].value = ck::add(s[i].value, s[i + 1].value);
        s.erase(at + 1);
        break;
    case Rule::fuse:
        s[i - 1].value = ck::sub(ck::add(s[i - 1].value, s[i + 1].value), 2);
        s.erase(at, at + 2);
        break;
    case Rule::run_alone: s[0] = {false, 0}; break;
    case Rule::run_lead:
    case Rule::zero_lead: s.erase(at, at + 2); break;
    case Rule::run_trail:
    case Rule::zero_trail: s.erase(at - 1, at + 1); break;
    case Rule::one_mid:
        s[i - 1].value = ck::sub(s[i - 1].value, 1);
        s[i + 1].value = ck::sub(s[i + 1].value, 1);
        s.erase(at);
        break;
    case Rule::one_lead:
        s[i + 1].value = ck::sub(s[i + 1].value, 1);
        s.erase(at);
        break;
    case Rule::one_trail:
        s[i - 1].value = ck::sub(s[i - 1].value, 1);
        s.erase(at);
        break;
    case Rule::zero_mid:
        s[i - 1].value = ck::add(s[i - 1].value, s[i + 1].value);
        s.erase(at, at + 2);
        break;
    }
}

} // namespace

NormSeq rewrite_terminal(RawSeq s, std::mt19937_64* rng)
{
    for (;;) {
        auto rules = applicable(s);
        if (rules.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, rules.size() - 1)(*rng);
        apply_rewrite(s, rules[pick]);
    }
    NormSeq out;
    out.reserve(s.size());
    for (const auto& it : s) {
        if (it.run) throw std::invalid_argument("adjacent 2^[t] blocks with exponent below -1: " + to_string(s));
        out.push_back(it.value);
    }
    return out;
}

Reduced reduce(const RawSeq& raw, std::mt19937_64* rng)
{
    NormSeq t = rewrite_terminal(raw, rng);
    if (t.empty() || t == NormSeq{1}) return {SeqTag::s3, {}, false};
    if (t == NormSeq{0}) return {SeqTag::s1xs2, {}, false};
    if (kind_of(t) == SeqKind::norm) return {SeqTag::sequence, std::move(t), false};
    LensSpace l = lens_of_value(cf_eval(t));
    if (l.is_s3()) return {SeqTag::s3, {}, true};
    if (l.is_s1s2()) return {SeqTag::s1xs2, {}, true};
    return {SeqTag::sequence, cf_expand_norm(ExtRational(l.p, l.q)), true};
}

LensSpace to_lens(const NormSeq& s) { return lens_of_value(cf_eval(s)); }

LensSpace to_lens(const Reduced& r)
{
    switch (r.tag) {
    case SeqTag::s3: return {1, 0};
    case SeqTag::s1xs2: return {0, 1};
    default: return to_lens(r.seq);
    }
}

NormSeq riemenschneider_dual(const NormSeq& a)
{
    if (a.empty() || kind_of(a) != SeqKind::norm)
        throw std::invalid_argument("riemenschneider_dual needs entries >= 2");
    ExtRational x = cf_eval(a);
    return cf_expand_norm(ExtRational(x.num(), x.num() - x.den()));
}

namespace {

std::vector<i64> positive_divisors(i64 n)
{
    n = ck::abs(n);
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::set<i64> gofk_exponent_sums(const LensSpace& l)
{
    // (a,2,b) evaluates to (2ab-a-b)/(2b-1), so (2a-1)(2b-1) = 1 +- 2p.
    std::set<i64> out;
    const i64 p = l.p;
    std::vector<i64> targets{ck::add(1, ck::mul(2, p))};
    if (p != 0) targets.push_back(ck::sub(1, ck::mul(2, p)));
    for (i64 n : targets) {
        for (i64 d0 : positive_divisors(n)) {
            for (i64 d : {d0, -d0}) {
                i64 a = (d + 1) / 2;
                i64 b = (n / d + 1) / 2;
                i64 num = ck::sub(ck::mul(ck::mul(2, a), b), ck::add(a, b));
                LensSpace m = lens_normalize(num, ck::sub(ck::mul(2, b), 1));
                if (homeo_oriented(m, l)) out.insert(a + b - 1);
            }
        }
    }
    return out;
}

std::set<i64> gofk_exponent_sums(const NormSeq& s) { return gofk_exponent_sums(to_lens(s)); }
std::set<i64> gofk_exponent_sums(const Reduced& r) { return gofk_exponent_sums(to_lens(r)); }

std::string pattern_name(GofkPattern p)
{
    switch (p) {
    case GofkPattern::r2s: return "(r,2,s)";
    case GofkPattern::r: return "(r)";
    case GofkPattern::r3: return "(r,3)";
    case GofkPattern::r3twos: return "(r,3,2^[s-1])";
    case GofkPattern::twos: return "(2^[r-1])";
    case GofkPattern::four_twos: return "(4,2^[s-1])";
    case GofkPattern::twos_four_twos: return "(2^[r-1],4,2^[s-1])";
    }
    return "?";
}

NormSeq pattern_sequence(GofkPattern p, i64 r, i64 s)
{
    auto twos = [](i64 k) { return NormSeq(static_cast<std::size_t>(k), 2); };
    NormSeq out;
    switch (p) {
    case GofkPattern::r2s: return {r, 2, s};
    case GofkPattern::r: return {r};
    case GofkPattern::r3: return {r, 3};
    case GofkPattern::r3twos:
        out = {r, 3};
        for (i64 v : twos(s - 1)) out.push_back(v);
        return out;
    case GofkPattern::twos: return twos(r - 1);
    case GofkPattern::four_twos:
        out = {4};
        for (i64 v : twos(s - 1)) out.push_back(v);
        return out;
    case GofkPattern::twos_four_twos:
        out = twos(r - 1);
        out.push_back(4);
        for (i64 v : twos(s - 1)) out.push_back(v);
        return out;
    }
    return out;
}

std::set<i64> pattern_values(GofkPattern p, i64 r, i64 s, bool as_printed)
{
    switch (p) {
    case GofkPattern::r2s: return {r + s - 1};
    case GofkPattern::r:
        if (r == 4) return {r - 1, r + 1, -3};
        return {r - 1, r + 1};
    case GofkPattern::r3: return {r - 2};
    case GofkPattern::r3twos: return {r - s - 1};
    case GofkPattern::twos: return {-r + 1, -r - 1};
    case GofkPattern::four_twos: return {as_printed ? -r - 2 : -s - 2};
    case GofkPattern::twos_four_twos: return {-r - s - 1};
    }
    return {};
}

namespace {

bool all_twos(NormSeq::const_iterator b, NormSeq::const_iterator e)
{
    return std::all_of(b, e, [](i64 v) { return v == 2; });
}

void match_one(const NormSeq& q, bool reversed, std::vector<PatternMatch>& out)
{
    const auto n = static_cast<i64>(q.size());
    if (n == 0) return;
    auto add = [&](GofkPattern p, i64 r, i64 s) {
        for (const auto& m : out)
            if (m.pattern == p && m.r == r && m.s == s) return;
        out.push_back({p, r, s, reversed});
    };
    if (n == 3 && q[1] == 2 && q[0] >= 2 && q[2] >= 2) add(GofkPattern::r2s, q[0], q[2]);
    if (n == 1 && q[0] >= 2) add(GofkPattern::r, q[0], 0);
    if (n == 2 && q[0] >= 2 && q[1] == 3) add(GofkPattern::r3, q[0], 0);
    if (n >= 3 && q[0] >= 2 && q[1] == 3 && all_twos(q.begin() + 2, q.end())) add(GofkPattern::r3twos, q[0], n - 1);
    if (all_twos(q.begin(), q.end())) add(GofkPattern::twos, n + 1, 0);
    if (n >= 2 && q[0] == 4 && all_twos(q.begin() + 1, q.end())) add(GofkPattern::four_twos, 0, n);
    auto four = std::find(q.begin(), q.end(), 4);
    if (four != q.end() && four != q.begin() && four + 1 != q.end() && all_twos(q.begin(), four) &&
        all_twos(four + 1, q.end())) {
        i64 j = four - q.begin();
        add(GofkPattern::twos_four_twos, j + 1, n - j);
    }
}

} // namespace

std::vector<PatternMatch> match_gofk_patterns(const NormSeq& s)
{
    std::vector<PatternMatch> out;
    match_one(s, false, out);
    NormSeq r(s.rbegin(), s.rend());
    match_one(r, true, out);
    return out;
}

bool matches_gofk_pattern(const NormSeq& s)
{
    const std::size_t n = s.size();
    if (n == 0 || std::any_of(s.begin(), s.end(), [](i64 v) { return v < 2; })) return false;
    if (n == 1) return true;
    if (n == 3 && s[1] == 2) return true;
    if (n == 2 && (s[0] == 3 || s[1] == 3)) return true;
    std::size_t others = 0, pos = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (s[i] != 2) ++others, pos = i;
    if (others == 0) return true;
    if (others == 1 && s[pos] == 4) return true;
    // (r,3,2,...,2) either way round
    auto tail_twos = [&](std::size_t from) {
        for (std::size_t i = from; i < n; ++i)
            if (s[i] != 2) return false;
        return true;
    };
    auto head_twos = [&](std::size_t to) {
        for (std::size_t i = 0; i < to; ++i)
            if (s[i] != 2) return false;
        return true;
    };
    return (s[1] == 3 && tail_twos(2)) || (s[n - 2] == 3 && head_twos(n - 2));
}

std::set<i64> table_exponent_sums(const NormSeq& s)
{
    std::set<i64> out;
    for (const auto& m : match_gofk_patterns(s)) {
        auto v = pattern_values(m.pattern, m.r, m.s);
        out.insert(v.begin(), v.end());
    }
    return out;
}

} // namespace sf
