#include <stdexcept>

#include "surgeryforge/parallel.hpp"
#include "surgeryforge/pentangle.hpp"

namespace sf {

namespace {

const ExtRational kX[] = {ExtRational(0), ExtRational::infinity(), ExtRational(-1)};

bool row_two_bridge(const P5Filling& f, Row r)
{
    auto q = chart_row(f, r);
    return q && montesinos_is_two_bridge(*q);
}

void check_tuple(const P5Filling& f, PentangleReport& rep)
{
    ++rep.tuples_checked;
    for (const auto& x : kX)
        if (!two_bridge_necessary(f, x)) return;
    ++rep.necessary_all_three;
    if (simplifies(f)) ++rep.simplified;
    else rep.counterexamples.push_back(f);

    bool ok[8];
    for (Row r : kAllRows) ok[static_cast<int>(r)] = row_two_bridge(f, r);
    const auto& cs = case_triples();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (ok[static_cast<int>(cs[i].we)] && ok[static_cast<int>(cs[i].n)] && ok[static_cast<int>(cs[i].f)])
            ++rep.case_counts[i];
}

void merge(PentangleReport& into, const PentangleReport& part)
{
    into.tuples_checked += part.tuples_checked;
    into.necessary_all_three += part.necessary_all_three;
    into.simplified += part.simplified;
    into.counterexamples.insert(into.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
    for (std::size_t i = 0; i < into.case_counts.size(); ++i) into.case_counts[i] += part.case_counts[i];
}

void check_bound(i64 bound)
{
    if (bound < 2) throw std::invalid_argument("height bound must be >= 2");
}

} // namespace

PentangleReport verify_fillingsimplifies_serial(i64 bound)
{
    check_bound(bound);
    const auto s = slopes_up_to(bound);
    PentangleReport rep;
    rep.bound = bound;
    for (const auto& nw : s)
        for (const auto& ne : s)
            for (const auto& sw : s)
                for (const auto& se : s) check_tuple({nw, ne, sw, se, std::nullopt}, rep);
    return rep;
}

PentangleReport verify_fillingsimplifies(i64 bound, int jobs)
{
    check_bound(bound);
    const auto s = slopes_up_to(bound);
    const std::size_t n = s.size();
    // One task per (NW, NE) prefix; partial reports merge in prefix order.
    auto parts = parallel_map(n * n, jobs, [&](std::size_t idx) {
        PentangleReport part;
        const auto& nw = s[idx / n];
        const auto& ne = s[idx % n];
        for (const auto& sw : s)
            for (const auto& se : s) check_tuple({nw, ne, sw, se, std::nullopt}, part);
        return part;
    });
    PentangleReport rep;
    rep.bound = bound;
    for (const auto& p : parts) merge(rep, p);
    return rep;
}

} // namespace sf
