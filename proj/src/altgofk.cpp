#include <algorithm>
#include <map>

#include "surgeryforge/families.hpp"

namespace sf {

namespace {

constexpr i64 kCensusT = 3, kCensusSeq = 5, kFamilyT = 12, kFamilyN = 40;

bool meets_exponent_window(const std::vector<i64>& sums)
{
    return std::any_of(sums.begin(), sums.end(), [](i64 e) { return e == -1 || e == 1 || e == 3; });
}

} // namespace

AltReport alt_gofk_pipeline(int jobs)
{
    AltReport rep;
    rep.census_t_bound = kCensusT;
    rep.census_seq_bound = kCensusSeq;
    rep.family_t_max = kFamilyT;

    // Candidate lens spaces, one per oriented class, first source wins.
    std::map<LensSpace, std::string> pool;
    for (const auto& c : gofklens_census(kCensusT, kCensusSeq, jobs).classes)
        pool.try_emplace(c.lens, "census " + to_string(c.sources.front().seq));
    auto add_entries = [&](const std::vector<ExpectedEntry>& es) {
        for (const auto& e : es) pool.try_emplace(oriented_key(lens_normalize(e.entry.p, e.entry.q)), e.family);
    };
    add_entries(lemma_entries(kFamilyN, kFamilyT));
    add_entries(omitted_entries(kFamilyT));

    for (const auto& [lens, source] : pool) {
        AltCandidate c;
        c.lens = lens;
        c.source = source;
        c.parity_ok = lens.p % 2 == 0 && lens.p >= 18;
        c.not_lens_n1 = !homeo_unoriented(lens, LensSpace{lens.p, 1});
        const auto sums = gofk_exponent_sums(mirror(lens));
        c.exponent_sums.assign(sums.begin(), sums.end());
        c.exponent_ok = meets_exponent_window(c.exponent_sums);
        if (c.parity_ok && c.not_lens_n1 && c.exponent_ok) rep.survivors.push_back(lens);
        rep.candidates.push_back(std::move(c));
    }

    for (const auto& lens : rep.survivors) {
        for (i64 p : {lens.p - 1, lens.p + 1}) {
            if (p < 19) continue;
            AltBranch br{lens.p, p, lens, {}, false, ""};
            for (int eps : {1, -1}) {
                for (const auto& s : star_solutions(p, eps)) {
                    if (2 * s.k > p) continue; // k and p-k give the same knot
                    const SimpleKnot K(p, s.q, s.k);
                    AltBranch::Solution sol{eps, s.k, s.q, genus_primitive(K), {}};
                    sol.same_genus = knots_with_genus(lens, sol.genus);
                    if (!sol.same_genus.empty()) br.survives = true;
                    br.solutions.push_back(std::move(sol));
                }
            }
            if (br.solutions.empty())
                br.note = "no solutions";
            else if (!br.survives)
                br.note = "no knot of matching genus in " + lens.str();
            if (br.survives) rep.final_p.push_back(p);
            rep.branches.push_back(std::move(br));
        }
    }

    const LensSpace want[] = {{18, 11}, {32, 7}, {50, 41}, {68, 59}};
    std::vector<LensSpace> want_keys;
    for (const auto& l : want) want_keys.push_back(oriented_key(l));
    std::vector<LensSpace> got = rep.survivors;
    std::sort(want_keys.begin(), want_keys.end());
    std::sort(got.begin(), got.end());
    if (got != want_keys) {
        std::string s = "survivors:";
        for (const auto& l : rep.survivors) s += " " + l.str();
        rep.deviations.push_back(s);
    }
    const std::map<i64, std::string> fate = {{19, "survives"},     {31, "survives"}, {33, "no solutions"},
                                             {51, "no solutions"}, {69, "no solutions"},
                                             {49, "genus"},        {67, "genus"}};
    for (const auto& br : rep.branches) {
        auto it = fate.find(br.p);
        std::string got_fate = br.survives ? "survives" : br.solutions.empty() ? "no solutions" : "genus";
        if (it == fate.end() || it->second != got_fate)
            rep.deviations.push_back("branch N=" + std::to_string(br.N) + " p=" + std::to_string(br.p) + ": " + got_fate);
    }
    if (rep.final_p != std::vector<i64>{19, 31}) rep.deviations.push_back("final branches differ from {19, 31}");
    return rep;
}

} // namespace sf
