#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "surgeryforge/families.hpp"
#include "surgeryforge/lens.hpp"
#include "surgeryforge/normseq.hpp"
#include "surgeryforge/pentangle.hpp"
#include "surgeryforge/rational.hpp"
#include "surgeryforge/simpleknot.hpp"
#include "surgeryforge/tangle.hpp"

namespace sf::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json parameters = json::object();
    json results = json::array();
    json counterexamples = json::array();
    bool verify = false; // counterexamples turn into exit code 1
};

i64 to_int(const std::string& s)
{
    std::size_t used = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
    if (used != s.size()) throw UsageError("not an integer: " + s);
    return v;
}

ExtRational to_rational(const std::string& s) { return ExtRational::parse(s); }

LensSpace to_lens_arg(const std::string& s) { return LensSpace::parse(s); }

json seq_json(const NormSeq& s) { return to_string(s); }

// ---------------------------------------------------------------------------
// Command bodies. Each fills a Report; argument errors throw.

Report cmd_cf_eval(const std::string& text)
{
    Report r{"cf eval"};
    r.parameters["cf"] = text;
    const ContFrac cf = ContFrac::parse(text);
    r.results.push_back({{"cf", cf.str()}, {"value", cf_eval(cf).str()}});
    return r;
}

Report cmd_cf_expand(const std::string& text)
{
    Report r{"cf expand"};
    r.parameters["value"] = text;
    const ExtRational x = to_rational(text);
    const auto coeffs = cf_expand_norm(x);
    r.results.push_back({{"value", x.str()}, {"cf", ContFrac{coeffs, std::nullopt}.str()}});
    return r;
}

Report cmd_lens_normalize(const std::string& p, const std::string& q)
{
    Report r{"lens normalize"};
    r.parameters = {{"p", p}, {"q", q}};
    const LensSpace l = lens_normalize(to_int(p), to_int(q));
    r.results.push_back({{"lens", l.str()}, {"oriented_key", oriented_key(l).str()}, {"mirror", mirror(l).str()}});
    return r;
}

Report cmd_lens_homeo(const std::vector<std::string>& a, bool oriented)
{
    Report r{"lens homeo"};
    r.parameters = {{"a", "L(" + a[0] + "," + a[1] + ")"}, {"b", "L(" + a[2] + "," + a[3] + ")"}, {"oriented", oriented}};
    const LensSpace x = lens_normalize(to_int(a[0]), to_int(a[1]));
    const LensSpace y = lens_normalize(to_int(a[2]), to_int(a[3]));
    const bool o = homeo_oriented(x, y), u = homeo_unoriented(x, y);
    r.results.push_back({{"a", x.str()},
                         {"b", y.str()},
                         {"homeo_oriented", o},
                         {"homeo_unoriented", u},
                         {"result", oriented ? o : u}});
    return r;
}

Report cmd_normseq_reduce(const std::string& text)
{
    Report r{"normseq reduce"};
    r.parameters["sequence"] = text;
    const RawSeq raw = parse_raw_seq(text);
    const Reduced red = reduce(raw);
    r.results.push_back({{"input", to_string(raw)},
                         {"value", eval_raw(raw).str()},
                         {"reduced", red.str()},
                         {"semantic", red.semantic},
                         {"lens", to_lens(red).str()}});
    return r;
}

Report cmd_normseq_dual(const std::string& text)
{
    Report r{"normseq dual"};
    r.parameters["sequence"] = text;
    const Reduced red = reduce(parse_raw_seq(text));
    if (red.tag != SeqTag::sequence) throw UsageError("dual needs a non-empty norm sequence");
    const NormSeq b = riemenschneider_dual(red.seq);
    r.results.push_back({{"a", seq_json(red.seq)},
                         {"b", seq_json(b)},
                         {"a_value", cf_eval(red.seq).str()},
                         {"b_value", cf_eval(b).str()}});
    return r;
}

Report cmd_normseq_gofk(const std::string& text)
{
    Report r{"normseq gofk"};
    r.parameters["input"] = text;
    LensSpace l;
    std::optional<NormSeq> seq;
    if (!text.empty() && text.front() == '(') {
        const Reduced red = reduce(parse_raw_seq(text));
        l = to_lens(red);
        if (red.tag == SeqTag::sequence) seq = red.seq;
    } else {
        l = to_lens_arg(text);
    }
    json sums = json::array();
    for (i64 e : gofk_exponent_sums(l)) sums.push_back(e);
    json row{{"lens", l.str()}, {"exponent_sums", sums}};
    if (seq) {
        row["sequence"] = to_string(*seq);
        json pats = json::array();
        for (const auto& m : match_gofk_patterns(*seq))
            pats.push_back({{"pattern", pattern_name(m.pattern)}, {"r", m.r}, {"s", m.s}, {"reversed", m.reversed}});
        row["patterns"] = pats;
    }
    r.results.push_back(row);
    return r;
}

json knot_json(const SimpleKnot& K)
{
    json j{{"p", K.p}, {"q", K.q}, {"k", K.k}, {"chi", euler_char(K)}, {"genus", nullptr}, {"order", K.p}};
    try {
        j["genus"] = genus_primitive(K);
    } catch (const std::invalid_argument&) {
    }
    return j;
}

Report cmd_simpleknot_chi(const std::vector<std::string>& a)
{
    Report r{"simpleknot chi"};
    r.parameters = {{"p", a[0]}, {"q", a[1]}, {"k", a[2]}};
    r.results.push_back(knot_json(SimpleKnot(to_int(a[0]), to_int(a[1]), to_int(a[2]))));
    return r;
}

Report cmd_simpleknot_star(const std::string& p_text, const std::string& eps_text)
{
    Report r{"simpleknot star"};
    r.parameters = {{"p", p_text}, {"eps", eps_text.empty() ? json("both") : json(eps_text)}};
    const i64 p = to_int(p_text);
    std::vector<int> epss{1, -1};
    if (!eps_text.empty()) {
        const i64 e = to_int(eps_text);
        if (e != 1 && e != -1) throw UsageError("--eps must be +1 or -1");
        epss = {static_cast<int>(e)};
    }
    for (int e : epss)
        for (const auto& s : star_solutions(p, e))
            r.results.push_back({{"p", p}, {"eps", e}, {"k", s.k}, {"q", s.q}, {"canonical_k", s.canonical_k}});
    return r;
}

Report cmd_simpleknot_genus_search(const std::string& lens, const std::string& g)
{
    Report r{"simpleknot genus-search"};
    r.parameters = {{"lens", lens}, {"genus", g}};
    for (const auto& K : knots_with_genus(to_lens_arg(lens), to_int(g))) r.results.push_back(knot_json(K));
    return r;
}

Report cmd_tangle_two_bridge(const std::string& text)
{
    Report r{"tangle two-bridge"};
    r.parameters["link"] = text;
    const MontesinosLink q = MontesinosLink::parse(text);
    r.results.push_back({{"link", q.str()}, {"two_bridge", montesinos_is_two_bridge(q)}});
    return r;
}

json pentangle_summary(const PentangleReport& rep)
{
    json cases = json::array();
    for (i64 c : rep.case_counts) cases.push_back(c);
    return {{"bound", rep.bound},
            {"tuples_checked", rep.tuples_checked},
            {"necessary_all_three", rep.necessary_all_three},
            {"simplified", rep.simplified},
            {"case_counts", cases}};
}

Report cmd_pentangle_verify(i64 bound, int jobs, bool serial)
{
    Report r{"pentangle verify"};
    r.verify = true;
    r.parameters = {{"bound", bound}, {"serial", serial}};
    if (bound < 2) throw UsageError("--bound must be >= 2");
    const PentangleReport rep = serial ? verify_fillingsimplifies_serial(bound) : verify_fillingsimplifies(bound, jobs);
    r.results.push_back(pentangle_summary(rep));
    for (const auto& f : rep.counterexamples) r.counterexamples.push_back(f.str());
    return r;
}

Report cmd_pentangle_check(const std::vector<std::string>& a)
{
    Report r{"pentangle check"};
    r.parameters = {{"nw", a[0]}, {"ne", a[1]}, {"sw", a[2]}, {"se", a[3]}};
    const P5Filling f{to_rational(a[0]), to_rational(a[1]), to_rational(a[2]), to_rational(a[3]), std::nullopt};
    json row{{"filling", f.str()}, {"nonhyperbolic", is_nonhyperbolic(f)}};
    const P3Factor p3 = factors_through_P3(f);
    row["factors_through"] = p3 == P3Factor::no ? "none" : p3 == P3Factor::P3 ? "P3" : "mirror P3";
    row["simplifies"] = simplifies(f);
    for (const ExtRational& x : {ExtRational(0), ExtRational::infinity(), ExtRational(-1)})
        row["necessary_at_" + x.str()] = two_bridge_necessary(f, x);
    r.results.push_back(row);
    return r;
}

FamilyParams family_args(Family f, const std::vector<std::string>& a)
{
    auto need = [&](std::size_t n) {
        if (a.size() != n)
            throw UsageError(family_name(f) + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
    };
    switch (f) {
    case Family::X0:
    case Family::X3:
    case Family::A: need(2); return {to_int(a[0]), to_int(a[1]), 0};
    case Family::X1:
    case Family::X2: need(2); return {to_int(a[0]), 0, to_rational(a[1])};
    case Family::B: need(1); return {0, 0, to_rational(a[0])};
    }
    return {};
}

Report cmd_families_eval(const std::string& fam, const std::vector<std::string>& args)
{
    Report r{"families eval"};
    Family f;
    try {
        f = parse_family(fam);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.parameters = {{"family", fam}, {"args", args}};
    const FamilyParams pr = family_args(f, args);
    if (auto why = family_exclusion(f, pr)) throw UsageError(*why);
    const auto [s1, s2] = family_slopes(f, pr);
    for (const auto& slot : family_slots(f))
        r.results.push_back({{"family", fam},
                             {"slopes", s1.str() + "," + s2.str()},
                             {"slot", slot.str()},
                             {"lens", family_lens(f, pr, slot).str()}});
    if (f == Family::X1)
        r.results.push_back({{"family", fam},
                             {"slopes", s1.str() + "," + s2.str()},
                             {"slot", "1 (as printed)"},
                             {"lens", x1_slot1_printed(pr.m, pr.r).str()}});
    return r;
}

std::string entry_str(const CensusEntry& e)
{
    return "(" + std::to_string(e.p) + "," + std::to_string(e.q) + "," + std::to_string(e.k) + ")";
}

Report cmd_families_census(i64 tmax, i64 seqmax, int jobs)
{
    Report r{"families census"};
    r.verify = true;
    r.parameters = {{"tmax", tmax}, {"seqmax", seqmax}};
    if (tmax < 1 || seqmax < 1) throw UsageError("--tmax and --seqmax must be >= 1");
    const CensusReport rep = gofklens_census(tmax, seqmax, jobs);
    r.parameters["max_length"] = rep.max_length;
    r.parameters["max_entry"] = rep.max_entry;
    r.parameters["a_sequences"] = rep.a_sequences;
    for (const auto& c : rep.classes) {
        std::string status = "unexplained", family;
        for (const auto& e : rep.expected)
            if (homeo_oriented(c.lens, lens_normalize(e.entry.p, e.entry.q))) status = "expected", family = e.family;
        if (status != "expected")
            for (const auto& e : rep.known_omissions)
                if (homeo_oriented(c.lens, lens_normalize(e.entry.p, e.entry.q))) status = "omitted", family = e.family;
        json ks = json::array();
        for (i64 k : c.ks) ks.push_back(k);
        r.results.push_back({{"lens", c.lens.str()},
                             {"p", c.lens.p},
                             {"q", c.lens.q},
                             {"k", ks},
                             {"status", status},
                             {"family", family},
                             {"source", c.sources.front().kind},
                             {"a", to_string(c.sources.front().a)},
                             {"sequence", to_string(c.sources.front().seq)},
                             {"source_count", c.source_count}});
    }
    for (const auto& e : rep.missing) r.counterexamples.push_back("missing " + e.family + " " + entry_str(e.entry));
    for (const auto& c : rep.unexplained) r.counterexamples.push_back("unexplained " + c.lens.str());
    return r;
}

Report cmd_families_intersections(i64 bound)
{
    Report r{"families verify intersections"};
    r.verify = true;
    r.parameters["bound"] = bound;
    if (bound < 2) throw UsageError("--bound must be >= 2");
    const IntersectionReport rep = verify_three_filling_intersections(bound);
    for (const auto& c : rep.coincidences) {
        json checks = json::array();
        for (const auto& k : c.checks)
            checks.push_back(k.what + ": " + k.left.str() + " " + k.right.str() + " " + relation_name(k.relation));
        const bool rational = c.f1 == Family::X1 || c.f1 == Family::X2;
        const bool rational2 = c.f2 == Family::X1 || c.f2 == Family::X2;
        r.results.push_back({{"case", c.case_label},
                             {"left", family_name(c.f1)},
                             {"left_m", c.p1.m},
                             {"left_n", rational ? json(c.p1.r.str()) : json(c.p1.n)},
                             {"right", family_name(c.f2)},
                             {"right_m", c.p2.m},
                             {"right_n", rational2 ? json(c.p2.r.str()) : json(c.p2.n)},
                             {"slopes", c.s1.str() + "," + c.s2.str()},
                             {"checks", checks}});
    }
    for (const auto& s : rep.missing) r.counterexamples.push_back("missing " + s);
    for (const auto& s : rep.unexplained) r.counterexamples.push_back("unexplained " + s);
    for (const auto& s : rep.mismatches) r.counterexamples.push_back("mismatch " + s);
    return r;
}

Report cmd_families_prop15(i64 bound)
{
    Report r{"families verify prop15"};
    r.verify = true;
    r.parameters["bound"] = bound;
    if (bound < 2) throw UsageError("--bound must be >= 2");
    const Prop15Report rep = prop15_consistency(bound);
    for (const auto& c : rep.comparisons)
        r.results.push_back(
            {{"comparison", c.what}, {"left", c.left.str()}, {"right", c.right.str()}, {"relation", relation_name(c.relation)}});
    for (const auto& s : rep.failures) r.counterexamples.push_back(s);
    return r;
}

Report cmd_families_alt(int jobs)
{
    Report r{"families verify alt-gofk"};
    r.verify = true;
    const AltReport rep = alt_gofk_pipeline(jobs);
    r.parameters = {{"census_tmax", rep.census_t_bound},
                    {"census_seqmax", rep.census_seq_bound},
                    {"family_tmax", rep.family_t_max},
                    {"candidates", rep.candidates.size()}};
    for (const auto& l : rep.survivors) r.results.push_back({{"stage", "survivor"}, {"lens", l.str()}});
    for (const auto& b : rep.branches) {
        json sols = json::array();
        for (const auto& s : b.solutions) {
            json same = json::array();
            for (const auto& K : s.same_genus) same.push_back(K.str());
            sols.push_back({{"eps", s.eps}, {"k", s.k}, {"q", s.q}, {"genus", s.genus}, {"same_genus", same}});
        }
        r.results.push_back({{"stage", "branch"},
                             {"lens", b.lens.str()},
                             {"N", b.N},
                             {"p", b.p},
                             {"survives", b.survives},
                             {"note", b.note},
                             {"solutions", sols}});
    }
    for (const auto& d : rep.deviations) r.counterexamples.push_back(d);
    return r;
}

Report cmd_families_optsurg(i64 family, i64 k, std::optional<i64> l)
{
    Report r{"families optsurg"};
    r.parameters = {{"family", family}, {"k", k}, {"l", l ? json(*l) : json(nullptr)}};
    const auto [a, b] = optsurg_catalog(static_cast<int>(family), k, l);
    for (const auto& K : {a, b}) r.results.push_back({{"knot", K.descriptor}, {"lens", K.lens.str()}});
    return r;
}

// ---------------------------------------------------------------------------
// Output

std::string scalar_str(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json envelope(const Report& r, std::optional<long long> elapsed_ms, bool with_results)
{
    json j{{"command", r.command}, {"version", kVersion}, {"parameters", r.parameters}};
    if (with_results) j["results"] = r.results;
    else j["result_count"] = r.results.size();
    j["counterexamples"] = r.counterexamples;
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
}

std::string render(const Report& r, const std::string& format, std::optional<long long> elapsed_ms)
{
    std::ostringstream os;
    if (format == "json") {
        os << envelope(r, elapsed_ms, true).dump(2) << "\n";
    } else if (format == "jsonl") {
        for (const auto& row : r.results) os << row.dump() << "\n";
        os << envelope(r, elapsed_ms, false).dump() << "\n";
    } else if (format == "csv") {
        // Scalar columns only; nested lists and objects are dropped.
        std::vector<std::string> cols;
        for (const auto& row : r.results)
            for (const auto& [key, v] : row.items())
                if (!v.is_structured() && std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
        os << "\n";
        for (const auto& row : r.results) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                os << (i ? "," : "");
                if (row.contains(cols[i])) os << csv_cell(scalar_str(row[cols[i]]));
            }
            os << "\n";
        }
    } else {
        os << r.command << " (surgeryforge " << kVersion << ")\n";
        for (const auto& [key, v] : r.parameters.items()) os << "  " << key << " = " << scalar_str(v) << "\n";
        for (const auto& row : r.results) {
            std::string line;
            for (const auto& [key, v] : row.items()) {
                if (!line.empty()) line += "  ";
                line += key + "=" + (v.is_structured() ? v.dump() : scalar_str(v));
            }
            os << line << "\n";
        }
        if (r.verify || !r.counterexamples.empty()) {
            os << "counterexamples: " << r.counterexamples.size() << "\n";
            for (const auto& c : r.counterexamples) os << "  " << scalar_str(c) << "\n";
        }
        if (elapsed_ms) os << "elapsed_ms: " << *elapsed_ms << "\n";
    }
    return os.str();
}

int default_jobs()
{
    const char* env = std::getenv("SURGERYFORGE_JOBS");
    if (!env || !*env) return 0;
    try {
        return static_cast<int>(to_int(env));
    } catch (const UsageError&) {
        return 0;
    }
}

} // namespace

Outcome run(const std::vector<std::string>& args)
{
    CLI::App app{"Exact Dehn surgery calculators and verification sweeps", "surgeryforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string format = "json";
    int jobs = default_jobs();
    bool timing = false;
    app.add_option("--format", format, "json, jsonl, csv or text")
        ->check(CLI::IsMember({"json", "jsonl", "csv", "text"}));
    app.add_option("--jobs", jobs, "sweep threads (default SURGERYFORGE_JOBS, else all cores)");
    app.add_flag("--timing", timing, "include elapsed_ms in the report");
    app.fallthrough();

    std::function<Report()> action;
    auto leaf = [](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* c = parent->add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* c = leaf(&app, name, help);
        c->require_subcommand(1);
        return c;
    };

    std::string s1, s2;
    std::vector<std::string> many;
    i64 n1 = 0, n2 = 0;
    std::optional<i64> opt_l;
    bool flag = false;

    auto* cf = group("cf", "continued fractions");
    leaf(cf, "eval", "value of [a1,...,an]")->add_option("cf", s1)->required();
    cf->get_subcommand("eval")->callback([&] { action = [&] { return cmd_cf_eval(s1); }; });
    leaf(cf, "expand", "norm continued fraction of p/q")->add_option("value", s1)->required();
    cf->get_subcommand("expand")->callback([&] { action = [&] { return cmd_cf_expand(s1); }; });

    auto* lens = group("lens", "lens spaces");
    auto* ln = leaf(lens, "normalize", "normal form of L(p,q)");
    ln->add_option("p", s1)->required();
    ln->add_option("q", s2)->required();
    ln->callback([&] { action = [&] { return cmd_lens_normalize(s1, s2); }; });
    auto* lh = leaf(lens, "homeo", "compare L(p,q) and L(p',q')");
    lh->add_option("args", many, "p q p' q'")->expected(4)->required();
    lh->add_flag("--oriented", flag, "orientation-preserving homeomorphism only");
    lh->callback([&] { action = [&] { return cmd_lens_homeo(many, flag); }; });

    auto* ns = group("normseq", "norm sequences");
    leaf(ns, "reduce", "canonical form of a sequence")->add_option("sequence", s1)->required();
    ns->get_subcommand("reduce")->callback([&] { action = [&] { return cmd_normseq_reduce(s1); }; });
    leaf(ns, "dual", "Riemenschneider dual")->add_option("sequence", s1)->required();
    ns->get_subcommand("dual")->callback([&] { action = [&] { return cmd_normseq_dual(s1); }; });
    leaf(ns, "gofk", "genus one fibered exponent sums of a sequence or L(p,q)")->add_option("input", s1)->required();
    ns->get_subcommand("gofk")->callback([&] { action = [&] { return cmd_normseq_gofk(s1); }; });

    auto* sk = group("simpleknot", "simple knots in lens spaces");
    leaf(sk, "chi", "Euler characteristic of K(p,q,k)")->add_option("args", many, "p q k")->expected(3)->required();
    sk->get_subcommand("chi")->callback([&] { action = [&] { return cmd_simpleknot_chi(many); }; });
    auto* ss = leaf(sk, "star", "solutions of k^2 + eps(k+1) = 0 mod p");
    ss->add_option("p", s1)->required();
    ss->add_option("--eps", s2, "+1 or -1 (default both)");
    ss->callback([&] { action = [&] { return cmd_simpleknot_star(s1, s2); }; });
    auto* sg = leaf(sk, "genus-search", "primitive simple knots of genus g in L");
    sg->add_option("lens", s1)->required();
    sg->add_option("genus", s2)->required();
    sg->callback([&] { action = [&] { return cmd_simpleknot_genus_search(s1, s2); }; });

    auto* tg = group("tangle", "Montesinos links");
    leaf(tg, "two-bridge", "two-bridge test for Q(a/b,...)")->add_option("link", s1)->required();
    tg->get_subcommand("two-bridge")->callback([&] { action = [&] { return cmd_tangle_two_bridge(s1); }; });

    auto* pt = group("pentangle", "pentangle fillings");
    auto* pv = leaf(pt, "verify", "sweep all 4-tuples of slopes up to a height bound");
    pv->add_option("--bound", n1, "slope height bound")->required();
    pv->add_flag("--serial", flag, "use the serial reference sweep");
    pv->callback([&] { action = [&] { return cmd_pentangle_verify(n1, jobs, flag); }; });
    leaf(pt, "check", "predicates for one filling")->add_option("slopes", many, "NW NE SW SE")->expected(4)->required();
    pt->get_subcommand("check")->callback([&] { action = [&] { return cmd_pentangle_check(many); }; });

    auto* fm = group("families", "magic manifold filling families");
    auto* fe = leaf(fm, "eval", "lens fillings of a family member");
    fe->add_option("family", s1, "X0, X1, X2, X3, A or B")->required();
    fe->add_option("params", many)->required();
    fe->callback([&] { action = [&] { return cmd_families_eval(s1, many); }; });
    auto* fc = leaf(fm, "census", "genus one fibered lens space census");
    fc->add_option("--tmax", n1, "t bound")->default_val(5);
    fc->add_option("--seqmax", n2, "a-sequence bound")->default_val(6);
    fc->callback([&] { action = [&] { return cmd_families_census(n1, n2, jobs); }; });
    auto* fo = leaf(fm, "optsurg", "once-punctured torus surgery pair");
    fo->add_option("family", n1, "1..6")->required();
    fo->add_option("k", n2)->required();
    fo->add_option("l", opt_l);
    fo->callback([&] { action = [&] { return cmd_families_optsurg(n1, n2, opt_l); }; });
    auto* fv = leaf(fm, "verify", "verification sweeps");
    fv->require_subcommand(1);
    auto* fvi = leaf(fv, "intersections", "coincidences between adjacent families");
    fvi->add_option("--bound", n1)->default_val(8);
    fvi->callback([&] { action = [&] { return cmd_families_intersections(n1); }; });
    auto* fvp = leaf(fv, "prop15", "A subfamilies against X0..X3");
    fvp->add_option("--bound", n1)->default_val(5);
    fvp->callback([&] { action = [&] { return cmd_families_prop15(n1); }; });
    leaf(fv, "alt-gofk", "alternative surgery elimination")->callback([&] {
        action = [&] { return cmd_families_alt(jobs); };
    });

    Outcome out;
    // CLI11 consumes arguments from the back.
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out.out = app.help();
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.out = app.help("", CLI::AppFormatMode::All);
        return out;
    } catch (const CLI::CallForVersion&) {
        out.out = std::string(kVersion) + "\n";
        return out;
    } catch (const CLI::ParseError& e) {
        out.code = 2;
        out.err = std::string(e.what()) + "\nRun with --help for usage.\n";
        return out;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        const Report rep = action();
        std::optional<long long> ms;
        if (timing)
            ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        out.out = render(rep, format, ms);
        out.code = rep.verify && !rep.counterexamples.empty() ? 1 : 0;
    } catch (const std::exception& e) {
        // Malformed or excluded input, or a value past int64.
        out.code = 2;
        out.err = std::string("error: ") + e.what() + "\n";
    }
    return out;
}

} // namespace sf::cli
