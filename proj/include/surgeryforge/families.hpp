#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surgeryforge/lens.hpp"
#include "surgeryforge/normseq.hpp"
#include "surgeryforge/rational.hpp"
#include "surgeryforge/simpleknot.hpp"

namespace sf {

// ---------------------------------------------------------------------------
// Magic manifold filling families. M3(a, b) leaves one cusp open; each member
// has two (X0..X3) or three (A, B) lens space fillings on that cusp.

enum class Family { X0, X1, X2, X3, A, B };
std::string family_name(Family f);
Family parse_family(const std::string& s);

struct FamilyParams {
    i64 m = 0, n = 0;
    ExtRational r; // p/q for X1, X2, B
};

class ExcludedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Why the parameters are outside the family, or nullopt.
std::optional<std::string> family_exclusion(Family f, const FamilyParams& pr);
// Lens space filling slopes of the open cusp.
std::vector<ExtRational> family_slots(Family f);
// The two filled slopes, as an ordered pair (smaller first).
std::pair<ExtRational, ExtRational> family_slopes(Family f, const FamilyParams& pr);
LensSpace family_lens(Family f, const FamilyParams& pr, const ExtRational& slot);
// X1 filling 1 in its printed closed form:
// L(2m(p-3q)+p-q, m(p-3q)-q). Its order disagrees with |H1|; family_lens
// uses L(2m(p-3q)-p+q, m(p-3q)-q).
LensSpace x1_slot1_printed(i64 m, const ExtRational& r);

// Unordered slope pairs that make M3 non-hyperbolic without either slope
// being exceptional: {-1,-1}, {4,1/2}, {3/2,5/2}.
bool is_exceptional_pair(const ExtRational& a, const ExtRational& b);

enum class Relation { oriented, mirror, different };
std::string relation_name(Relation r);
Relation lens_relation(const LensSpace& a, const LensSpace& b);

struct Comparison {
    std::string what;
    LensSpace left, right;
    Relation relation;
};

struct Coincidence {
    std::string case_label; // "1a", "2a", "2b", "3a" or "unexplained"
    Family f1, f2;
    FamilyParams p1, p2;
    ExtRational s1, s2; // shared slope pair
    std::vector<Comparison> checks;
};

struct IntersectionReport {
    i64 bound = 0;
    std::map<std::string, i64> instances; // per family
    std::vector<Coincidence> coincidences;
    std::vector<std::string> missing;     // predicted but not found
    std::vector<std::string> unexplained; // found but not predicted
    std::vector<std::string> mismatches;  // lens checks that disagree
    i64 excluded_exceptional = 0;
    bool ok() const { return missing.empty() && unexplained.empty() && mismatches.empty(); }
};

IntersectionReport verify_three_filling_intersections(i64 bound);

struct Prop15Report {
    i64 bound = 0;
    std::vector<Comparison> comparisons;
    std::vector<std::string> failures; // comparisons that are not even unoriented-equal
    bool ok() const { return failures.empty(); }
};

// Slopes {3/2, a, b} versus {4, (1-a)/(2-a), 3-b} along the A subfamilies
// A_{2,n} and A_{m,-1}, for |m|, |n| <= bound.
Prop15Report prop15_consistency(i64 bound);

// ---------------------------------------------------------------------------
// Lens spaces containing a genus one fibered knot that arise by positive
// integral surgery.

struct CensusSource {
    std::string kind; // template or small-type name
    NormSeq a;        // a-sequence (empty for small types)
    NormSeq seq;      // resulting norm sequence
};

struct CensusEntry {
    i64 p, q, k;
};

struct CensusClass {
    LensSpace lens;            // oriented representative
    std::vector<i64> ks;       // roots of -k^2 = q in (0, p/2]
    std::vector<CensusSource> sources; // first few, in enumeration order
    i64 source_count = 0;
};

struct ExpectedEntry {
    std::string family;
    CensusEntry entry;
};

struct CensusReport {
    i64 t_bound = 0, seq_bound = 0;
    i64 max_length = 0, max_entry = 0;
    i64 a_sequences = 0;
    std::vector<CensusClass> classes;           // sorted by (p, q)
    std::vector<ExpectedEntry> expected;        // the lemma's list within bounds
    std::vector<ExpectedEntry> missing;         // expected but not produced
    std::vector<ExpectedEntry> known_omissions; // produced, absent from the lemma's list, explained
    std::vector<CensusClass> unexplained;       // produced and neither expected nor explained
    bool ok() const { return missing.empty() && unexplained.empty(); }
};

// Templates built from an a-sequence and its dual b (1/[a] + 1/[b] = 1).
enum class LargeTemplate { a2b, merge, a5b, a22b, ab, merge1 };
inline constexpr LargeTemplate kAllTemplates[] = {LargeTemplate::a2b, LargeTemplate::merge, LargeTemplate::a5b,
                                                  LargeTemplate::a22b, LargeTemplate::ab, LargeTemplate::merge1};
std::string template_name(LargeTemplate t);
// The sequence, or nullopt when it collapses to S^3.
std::optional<NormSeq> apply_template(LargeTemplate t, const NormSeq& a, const NormSeq& b);

CensusReport gofklens_census(i64 t_bound, i64 seq_bound, int jobs = 0);
CensusReport gofklens_census_serial(i64 t_bound, i64 seq_bound);

// The lemma's list: (n,-1,1) for n <= nmax, the sporadic rows, and
// (9t+14,-9,3) for 1 <= t <= tmax.
std::vector<ExpectedEntry> lemma_entries(i64 nmax, i64 tmax);
// Families the census produces that the lemma's list leaves out.
std::vector<ExpectedEntry> omitted_entries(i64 tmax);

// ---------------------------------------------------------------------------
// Alternative surgeries on genus one fibered Berge knots.

struct AltCandidate {
    LensSpace lens;
    std::string source;
    bool parity_ok = false;      // order even and >= 18
    bool not_lens_n1 = false;    // not L(N, +-1)
    std::vector<i64> exponent_sums; // of the mirror, intersected below
    bool exponent_ok = false;    // meets {-1, 1, 3}
};

struct AltBranch {
    i64 N, p;
    LensSpace lens;
    struct Solution {
        int eps;
        i64 k, q;
        i64 genus;
        std::vector<SimpleKnot> same_genus; // in the order-N lens space
    };
    std::vector<Solution> solutions;
    bool survives = false;
    std::string note;
};

struct AltReport {
    i64 census_t_bound = 0, census_seq_bound = 0, family_t_max = 0;
    std::vector<AltCandidate> candidates;
    std::vector<LensSpace> survivors; // after filters (a), (b), (c), one per oriented class
    std::vector<AltBranch> branches;
    std::vector<i64> final_p;         // branch orders that survive
    // Differences from the expected intermediate sets: survivors L(18,11),
    // L(32,7), L(18t+14,-9) for t = 2, 3; branches p = 19 and 31 survive,
    // p = 33, 51, 69 have no solutions, p = 49, 67 fail on genus.
    std::vector<std::string> deviations;
    bool ok() const { return deviations.empty(); }
};

AltReport alt_gofk_pipeline(int jobs = 0);

// ---------------------------------------------------------------------------
// Surgery-dual pairs of knots with once-punctured torus Seifert surfaces.

struct OptKnot {
    std::string descriptor;
    LensSpace lens;
};

std::pair<OptKnot, OptKnot> optsurg_catalog(int family, i64 k, std::optional<i64> l = std::nullopt);

} // namespace sf
