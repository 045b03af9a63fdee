#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;
using sf::cli::Outcome;

namespace {

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "surgeryforge");
    return sf::cli::run(args);
}

json parse(const Outcome& o)
{
    REQUIRE(o.code == 0);
    return json::parse(o.out);
}

bool has_float(const json& j)
{
    if (j.is_number_float()) return true;
    if (j.is_structured())
        for (const auto& v : j)
            if (has_float(v)) return true;
    return false;
}

} // namespace

TEST_CASE("documented examples")
{
    const json chi = parse(run({"simpleknot", "chi", "49", "19", "18"}));
    CHECK(chi["results"][0]["chi"] == -33);
    CHECK(chi["results"][0]["genus"] == 17);
    CHECK(chi["command"] == "simpleknot chi");
    CHECK(chi["version"] == sf::cli::kVersion);

    const json homeo = parse(run({"lens", "homeo", "18", "5", "18", "11", "--oriented"}));
    CHECK(homeo["results"][0]["result"] == true);

    const Outcome v = run({"pentangle", "verify", "--bound", "2"});
    CHECK(v.code == 0);
    const json vj = json::parse(v.out);
    CHECK(vj["counterexamples"].empty());
    CHECK(vj["results"][0]["tuples_checked"] == 4096);
}

TEST_CASE("calculators")
{
    CHECK(parse(run({"cf", "eval", "[2,3]"}))["results"][0]["value"] == "5/3");
    CHECK(parse(run({"cf", "expand", "19/3"}))["results"][0]["cf"] == "[7,2,2]");
    CHECK(parse(run({"normseq", "reduce", "(3,2^[-1],4)"}))["results"][0]["reduced"] == "(5)");
    CHECK(parse(run({"lens", "normalize", "32", "-7"}))["results"][0]["lens"] == "L(32,25)");

    const json a = parse(run({"families", "eval", "A", "3", "2"}));
    REQUIRE(a["results"].size() == 3);
    CHECK(a["results"][0]["lens"] == "L(18,11)");
    CHECK(a["results"][1]["lens"] == "S3");
    CHECK(a["results"][2]["lens"] == "L(19,7)");

    const json b = parse(run({"families", "eval", "B", "4"}));
    CHECK(b["results"][1]["lens"] == "L(19,7)");
    CHECK(b["results"][2]["lens"] == "L(18,7)");

    // negative positionals are values, not options
    const json x0 = parse(run({"families", "eval", "X0", "-1", "6"}));
    CHECK(x0["results"][0]["lens"] == "L(7,3)");

    const json star = parse(run({"simpleknot", "star", "31", "--eps", "-1"}));
    REQUIRE(star["results"].size() == 2);
    CHECK(star["results"][0]["k"] == 13);
    CHECK(star["results"][0]["q"] == 17);
    CHECK(star["results"][1]["k"] == 19);
    CHECK(star["results"][1]["q"] == 11);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"lens", "homeo", "18", "5"}).code == 2);
    CHECK(run({"lens", "normalize", "x", "5"}).code == 2);
    CHECK(run({"pentangle", "verify", "--bound", "1"}).code == 2);
    CHECK(run({"simpleknot", "chi", "10", "4", "3"}).code == 2);
    CHECK(run({"cf", "eval", "[1/2,3]"}).code == 2);

    const Outcome excluded = run({"families", "eval", "A", "1", "4"});
    CHECK(excluded.code == 2);
    CHECK(excluded.err.find("A needs m not in {-1,0,1}") != std::string::npos);
    CHECK(excluded.out.empty());

    const Outcome help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("families") != std::string::npos);
    CHECK(run({"--version"}).out == std::string(sf::cli::kVersion) + "\n");

    for (const auto& cmd : std::vector<std::vector<std::string>>{{"families", "verify", "intersections", "--bound", "4"},
                                                                  {"families", "verify", "prop15", "--bound", "3"},
                                                                  {"pentangle", "verify", "--bound", "2", "--serial"}}) {
        const Outcome o = run(cmd);
        CHECK(o.code == 0);
        CHECK(json::parse(o.out)["counterexamples"].empty());
    }
}

TEST_CASE("formats")
{
    const Outcome csv = run({"families", "eval", "B", "4", "--format", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "family,slopes,slot,lens");
    int rows = 0;
    for (std::string l; std::getline(lines, l);) ++rows;
    CHECK(rows == 3);

    const Outcome jl = run({"pentangle", "verify", "--bound", "2", "--format", "jsonl"});
    REQUIRE(jl.code == 0);
    std::istringstream js(jl.out);
    std::vector<json> objs;
    for (std::string l; std::getline(js, l);) objs.push_back(json::parse(l));
    REQUIRE(objs.size() == 2);
    CHECK(objs.back()["result_count"] == 1);
    CHECK(objs.back()["counterexamples"].empty());

    const Outcome text = run({"lens", "homeo", "18", "5", "18", "11", "--format", "text"});
    CHECK(text.out.find("result=true") != std::string::npos);

    const json none = parse(run({"simpleknot", "genus-search", "L(50,41)", "17"}));
    CHECK(none["results"].empty());

    CHECK(run({"cf", "eval", "[2,3]", "--format", "yaml"}).code == 2);

    // timing is opt-in so default output stays reproducible
    CHECK_FALSE(parse(run({"cf", "eval", "[2,3]"})).contains("elapsed_ms"));
    CHECK(parse(run({"cf", "eval", "[2,3]", "--timing"}))["elapsed_ms"].is_number_integer());
}

TEST_CASE("reports hold exact values only")
{
    for (const auto& cmd : std::vector<std::vector<std::string>>{{"families", "verify", "alt-gofk"},
                                                                  {"families", "census", "--tmax", "2", "--seqmax", "4"},
                                                                  {"families", "verify", "prop15", "--bound", "3"},
                                                                  {"simpleknot", "genus-search", "L(18,11)", "5"},
                                                                  {"normseq", "gofk", "(4,2,2)"}})
        CHECK_FALSE(has_float(parse(run(cmd))));
}

TEST_CASE("output does not depend on --jobs or on the run")
{
    const std::vector<std::vector<std::string>> cmds = {
        {"pentangle", "verify", "--bound", "3"},
        {"families", "census", "--tmax", "2", "--seqmax", "4"},
        {"families", "verify", "alt-gofk"},
        {"families", "verify", "intersections", "--bound", "5"},
    };
    for (const auto& base : cmds) {
        const Outcome first = run(base);
        REQUIRE(first.code == 0);
        CHECK(run(base).out == first.out);
        for (const char* jobs : {"1", "2", "3"}) {
            auto cmd = base;
            cmd.insert(cmd.end(), {"--jobs", jobs});
            CHECK(run(cmd).out == first.out);
        }
    }

    // the environment default is just another job count
    ::setenv("SURGERYFORGE_JOBS", "2", 1);
    const Outcome env = run(cmds[0]);
    ::unsetenv("SURGERYFORGE_JOBS");
    CHECK(env.out == run(cmds[0]).out);
}
