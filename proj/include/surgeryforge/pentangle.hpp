#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surgeryforge/rational.hpp"
#include "surgeryforge/tangle.hpp"

namespace sf {

struct P5Filling {
    ExtRational nw, ne, sw, se;
    std::optional<ExtRational> x;

    std::string str() const;
    i64 height() const;
    bool operator==(const P5Filling&) const = default;
};

struct M5Filling {
    std::array<ExtRational, 5> a;
    bool operator==(const M5Filling&) const = default;
};

// M5(a1..a5) covers P(a2, 1-1/a1, 1-1/a4, a3, a5-1). A missing X maps to and
// from a5 = inf is not meaningful, so both directions need all five slopes.
P5Filling m5_to_p5(const M5Filling& m);
M5Filling p5_to_m5(const P5Filling& f);

enum class Sym { identity, swapLR, swapTB, swapFB, rot3, mirror };
P5Filling symmetry(const P5Filling& f, Sym s);
// The order-3 rotation fixing NE: rot3 conjugated by swapTB.
P5Filling rot3_ne(const P5Filling& f);

bool is_nonhyperbolic(const P5Filling& f);
enum class P3Factor { no, P3, mirrorP3 };
P3Factor factors_through_P3(const P5Filling& f);
bool simplifies(const P5Filling& f);

// Rows of the Conway-sphere chart: which sum is rational and by which tangle.
enum class Row { WxNW, WxSW, ExNE, ExSE, NxNW, NxNE, FxNE, FxSW };
inline constexpr Row kAllRows[] = {Row::WxNW, Row::WxSW, Row::ExNE, Row::ExSE,
                                   Row::NxNW, Row::NxNE, Row::FxNE, Row::FxSW};
std::string row_name(Row r);
// Filling of the fifth slot the row belongs to: 0, inf or -1.
ExtRational row_filling(Row r);
// The row's Montesinos link when its rationality constraint holds.
std::optional<MontesinosLink> chart_row(const P5Filling& f, Row r);

struct Presentation {
    Sym sigma; // Klein-four element applied to f before reading the row
    Row row;
    MontesinosLink link;
};
// x in {0, inf, -1}. Rows of the chart for x read on every image of f under
// the symmetries that fix X (identity, swapLR, swapTB, swapFB).
std::vector<Presentation> montesinos_presentations(const P5Filling& f, const ExtRational& x);
bool two_bridge_necessary(const P5Filling& f, const ExtRational& x);

// The sixteen case triples (W/E row, N row, F row), numbered from 1.
struct CaseTriple {
    Row we, n, f;
};
const std::array<CaseTriple, 16>& case_triples();
// Case number of a set of three row labels, or 0.
int case_of_rows(Row a, Row b, Row c);
// Row label permutations induced by the two order-3 rotations.
Row permute_row_se(Row r); // rotation fixing SE (rot3)
Row permute_row_ne(Row r); // rotation fixing NE

// Slopes of height <= bound: inf, 0, then the positive Stern-Brocot tree in
// level order with each v followed by -v.
std::vector<ExtRational> slopes_up_to(i64 bound);

struct PentangleReport {
    i64 bound = 0;
    i64 tuples_checked = 0;
    i64 necessary_all_three = 0;
    i64 simplified = 0; // among necessary_all_three
    std::vector<P5Filling> counterexamples;
    std::array<i64, 16> case_counts{};
    bool operator==(const PentangleReport&) const = default;
};

PentangleReport verify_fillingsimplifies(i64 bound, int jobs = 0);
// Plain nested loops; kept as the reference for the parallel sweep.
PentangleReport verify_fillingsimplifies_serial(i64 bound);

} // namespace sf
