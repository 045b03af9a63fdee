#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "surgeryforge/lens.hpp"
#include "surgeryforge/rational.hpp"

namespace sf {

using NormSeq = std::vector<i64>;

enum class SeqKind { norm, weak, raw };
SeqKind kind_of(const NormSeq& s); // norm: all >= 2; weak: all >= 0 or empty

// One entry of a sequence written with the 2^[t] shorthand.
struct SeqItem {
    bool run = false; // true: a block of `value` twos
    i64 value = 0;
    bool operator==(const SeqItem&) const = default;
};
using RawSeq = std::vector<SeqItem>;

RawSeq raw_from(const NormSeq& s);
RawSeq parse_raw_seq(std::string_view text); // "(3,2^[-1],4)"
std::string to_string(const NormSeq& s);
std::string to_string(const RawSeq& s);

// Value of a raw sequence; 2^[t] acts as the t-th power of the step for 2.
ExtRational eval_raw(const RawSeq& s);

enum class SeqTag { sequence, s3, s1xs2 };

struct Reduced {
    SeqTag tag = SeqTag::sequence;
    NormSeq seq;           // empty unless tag == sequence
    bool semantic = false; // rewriting stopped on negative entries
    bool operator==(const Reduced&) const = default;
    std::string str() const;
};

// Applies the rewrite rules until none applies. With rng the rule and
// position are chosen at random among the applicable ones. Throws if two
// shorthand blocks meet with a combined exponent below -1.
NormSeq rewrite_terminal(RawSeq s, std::mt19937_64* rng = nullptr);

// Canonical form: the terminal sequence when its entries are all >= 2, the
// S3/S1xS2 tag for (), (1), (0), and otherwise the norm sequence of the
// evaluated lens space (the rules keep p/q mod p fixed).
Reduced reduce(const RawSeq& s, std::mt19937_64* rng = nullptr);

LensSpace to_lens(const NormSeq& s);
LensSpace to_lens(const Reduced& r);

// The b with 1/[a] + 1/[b] = 1. Entries must be >= 2.
NormSeq riemenschneider_dual(const NormSeq& a);

// All E = a+b-1 with L(a,2,b) oriented-homeomorphic to L.
std::set<i64> gofk_exponent_sums(const LensSpace& l);
std::set<i64> gofk_exponent_sums(const NormSeq& s);
std::set<i64> gofk_exponent_sums(const Reduced& r);

// The seven columns of the genus-one fibered lens space table.
enum class GofkPattern { r2s, r, r3, r3twos, twos, four_twos, twos_four_twos };
inline constexpr GofkPattern kAllGofkPatterns[] = {
    GofkPattern::r2s,   GofkPattern::r,         GofkPattern::r3,           GofkPattern::r3twos,
    GofkPattern::twos,  GofkPattern::four_twos, GofkPattern::twos_four_twos};
std::string pattern_name(GofkPattern p);
// Pattern cell (r,s >= 2); one-parameter columns ignore the unused argument.
NormSeq pattern_sequence(GofkPattern p, i64 r, i64 s);
// Exponent sums the table prints for the cell. For four_twos the printed
// entry is -r-2; with `as_printed` false the chart value -s-2 is used.
std::set<i64> pattern_values(GofkPattern p, i64 r, i64 s, bool as_printed = false);

struct PatternMatch {
    GofkPattern pattern;
    i64 r, s;
    bool reversed;
};
// Every (pattern, r, s) whose cell equals s or its reverse.
std::vector<PatternMatch> match_gofk_patterns(const NormSeq& s);
// Same as !match_gofk_patterns(s).empty(), without allocating.
bool matches_gofk_pattern(const NormSeq& s);
// Union of the corrected table values over all matching cells.
std::set<i64> table_exponent_sums(const NormSeq& s);

} // namespace sf
