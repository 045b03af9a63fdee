#include <algorithm>
#include <map>
#include <stdexcept>

#include "surgeryforge/families.hpp"
#include "surgeryforge/parallel.hpp"

namespace sf {

namespace {

constexpr std::size_t kKeptSources = 4;

struct Hit {
    LensSpace key;
    CensusSource src;
};

NormSeq twos(i64 n) { return NormSeq(static_cast<std::size_t>(n), 2); }

std::vector<i64> k_roots(const LensSpace& l)
{
    std::vector<i64> out;
    for (i64 k = 1; 2 * k <= l.p; ++k)
        if (mod(-k * k, l.p) == mod(l.q, l.p)) out.push_back(k);
    return out;
}

void consider(std::vector<Hit>& out, std::string kind, const NormSeq& a, NormSeq seq)
{
    if (!matches_gofk_pattern(seq)) return;
    LensSpace key = oriented_key(to_lens(seq));
    if (key.is_s3()) return;
    out.push_back({key, {std::move(kind), a, std::move(seq)}});
}

struct Bounds {
    i64 max_length, max_entry;
};

Bounds bounds_for(i64 t_bound, i64 seq_bound)
{
    if (t_bound < 1 || seq_bound < 1) throw std::invalid_argument("census bounds must be >= 1");
    return {std::max(seq_bound, t_bound + 2), seq_bound + 3};
}

std::vector<Hit> small_types(const Bounds& b)
{
    std::vector<Hit> out;
    for (i64 n = 1; n <= b.max_length + 1; ++n) consider(out, "twos", {}, twos(n));
    consider(out, "2235", {}, {2, 2, 3, 5});
    consider(out, "432", {}, {4, 3, 2});
    consider(out, "234", {}, {2, 3, 4});
    return out;
}

// All a-sequences of the given length and first entry.
std::vector<Hit> large_types(const Bounds& b, i64 length, i64 first)
{
    std::vector<Hit> out;
    NormSeq a(static_cast<std::size_t>(length), 2);
    a[0] = first;
    for (;;) {
        const NormSeq dual = riemenschneider_dual(a);
        for (LargeTemplate t : kAllTemplates)
            if (auto seq = apply_template(t, a, dual)) consider(out, template_name(t), a, std::move(*seq));
        std::size_t i = a.size();
        while (i > 1 && a[i - 1] == b.max_entry) a[--i] = 2;
        if (i <= 1) break;
        ++a[i - 1];
    }
    return out;
}

bool matches(const CensusClass& c, const CensusEntry& e)
{
    const LensSpace l = lens_normalize(e.p, e.q);
    if (!homeo_oriented(c.lens, l)) return false;
    const SimpleKnot want(e.p, e.q, e.k);
    return std::any_of(c.ks.begin(), c.ks.end(),
                       [&](i64 k) { return equivalent(SimpleKnot(c.lens.p, c.lens.q, k), want); });
}

CensusReport assemble(i64 t_bound, i64 seq_bound, const Bounds& b, i64 a_count,
                      const std::vector<std::vector<Hit>>& chunks)
{
    CensusReport rep;
    rep.t_bound = t_bound;
    rep.seq_bound = seq_bound;
    rep.max_length = b.max_length;
    rep.max_entry = b.max_entry;
    rep.a_sequences = a_count;

    std::map<LensSpace, CensusClass> classes;
    for (const auto& chunk : chunks) {
        for (const auto& h : chunk) {
            auto [it, fresh] = classes.try_emplace(h.key);
            CensusClass& c = it->second;
            if (fresh) {
                c.lens = h.key;
                c.ks = k_roots(h.key);
            }
            ++c.source_count;
            if (c.sources.size() < kKeptSources) c.sources.push_back(h.src);
        }
    }
    for (auto& [key, c] : classes) rep.classes.push_back(std::move(c));

    rep.expected = lemma_entries(b.max_length + 2, b.max_length - 2);
    for (const auto& e : rep.expected)
        if (std::none_of(rep.classes.begin(), rep.classes.end(), [&](const CensusClass& c) { return matches(c, e.entry); }))
            rep.missing.push_back(e);

    const auto omitted = omitted_entries(b.max_length + 8);
    for (const auto& c : rep.classes) {
        auto hits = [&](const ExpectedEntry& e) { return matches(c, e.entry); };
        if (std::any_of(rep.expected.begin(), rep.expected.end(), hits)) continue;
        auto om = std::find_if(omitted.begin(), omitted.end(), hits);
        if (om != omitted.end())
            rep.known_omissions.push_back(*om);
        else
            rep.unexplained.push_back(c);
    }
    return rep;
}

i64 a_sequence_count(const Bounds& b)
{
    i64 total = 0, layer = 1;
    for (i64 l = 1; l <= b.max_length; ++l) total += (layer = ck::mul(layer, b.max_entry - 1));
    return total;
}

} // namespace

std::string template_name(LargeTemplate t)
{
    switch (t) {
    case LargeTemplate::a2b: return "a,2,b";
    case LargeTemplate::merge: return "a+b";
    case LargeTemplate::a5b: return "a,5,b";
    case LargeTemplate::a22b: return "a+1,2,2,b+1";
    case LargeTemplate::ab: return "a,b";
    case LargeTemplate::merge1: return "a+b+1";
    }
    return "?";
}

// With a = (a1..al) and b = (b1..bm), the templates read the b part
// backwards: (..., bm, ..., b2) or (..., b(m-1), ..., b1).
std::optional<NormSeq> apply_template(LargeTemplate t, const NormSeq& a, const NormSeq& b)
{
    if (a.empty() || b.empty()) throw std::invalid_argument("apply_template needs non-empty sequences");
    const std::size_t m = b.size();
    NormSeq out;
    auto b_back = [&](std::size_t from_top, std::size_t down_to) { // b[from_top-1] .. b[down_to-1]
        for (std::size_t i = from_top; i >= down_to && i >= 1; --i) out.push_back(b[i - 1]);
    };
    auto head = [&] { out.assign(a.begin(), a.end() - 1); };
    switch (t) {
    case LargeTemplate::a2b:
        out = a;
        out.push_back(2);
        b_back(m, 2);
        break;
    case LargeTemplate::merge:
        head();
        if (m == 1) break; // the trailing 2^[-1] absorbs a_l + b_1
        out.push_back(a.back() + b[m - 1]);
        b_back(m - 1, 2);
        break;
    case LargeTemplate::a5b:
        out = a;
        out.push_back(5);
        b_back(m, 2);
        break;
    case LargeTemplate::a22b:
        head();
        out.insert(out.end(), {a.back() + 1, 2, 2});
        if (m >= 2) {
            out.push_back(b[m - 1] + 1);
            b_back(m - 1, 2);
        }
        break;
    case LargeTemplate::ab:
        out = a;
        b_back(m, 1);
        break;
    case LargeTemplate::merge1:
        head();
        out.push_back(a.back() + b[m - 1] + 1);
        b_back(m - 1, 1);
        break;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

std::vector<ExpectedEntry> lemma_entries(i64 nmax, i64 tmax)
{
    std::vector<ExpectedEntry> out;
    for (i64 n = 2; n <= nmax; ++n) out.push_back({"(n,-1,1)", {n, n - 1, 1}});
    const CensusEntry sporadic[] = {{7, 3, 2}, {13, 4, 3}, {13, 9, 2}, {18, 11, 5}, {19, 3, 4}, {27, 11, 4}, {32, 7, 5}};
    for (const auto& e : sporadic)
        out.push_back({"(" + std::to_string(e.p) + "," + std::to_string(e.q) + "," + std::to_string(e.k) + ")", e});
    for (i64 t = 1; t <= tmax; ++t) out.push_back({"(9t+14,-9,3)", {9 * t + 14, 9 * t + 5, 3}});
    return out;
}

std::vector<ExpectedEntry> omitted_entries(i64 tmax)
{
    std::vector<ExpectedEntry> out{{"(5,1,2)", {5, 1, 2}}, {"(11,7,2)", {11, 7, 2}}, {"(14,5,3)", {14, 5, 3}}};
    for (i64 t = 1; t <= tmax; ++t) out.push_back({"(9t+13,-9,3)", {9 * t + 13, 9 * t + 4, 3}});
    return out;
}

CensusReport gofklens_census(i64 t_bound, i64 seq_bound, int jobs)
{
    const Bounds b = bounds_for(t_bound, seq_bound);
    const std::size_t per_length = static_cast<std::size_t>(b.max_entry - 1);
    const std::size_t tasks = static_cast<std::size_t>(b.max_length) * per_length;
    auto chunks = parallel_map(tasks, jobs, [&](std::size_t i) {
        return large_types(b, static_cast<i64>(i / per_length) + 1, static_cast<i64>(i % per_length) + 2);
    });
    chunks.insert(chunks.begin(), small_types(b));
    return assemble(t_bound, seq_bound, b, a_sequence_count(b), chunks);
}

CensusReport gofklens_census_serial(i64 t_bound, i64 seq_bound)
{
    const Bounds b = bounds_for(t_bound, seq_bound);
    std::vector<std::vector<Hit>> chunks{small_types(b)};
    for (i64 l = 1; l <= b.max_length; ++l)
        for (i64 first = 2; first <= b.max_entry; ++first) chunks.push_back(large_types(b, l, first));
    return assemble(t_bound, seq_bound, b, a_sequence_count(b), chunks);
}

} // namespace sf
