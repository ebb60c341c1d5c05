#include "quivar/cli.hpp"

#include "json.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    json out;
    std::string raw_out;
    std::string raw_err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = quivar::run_cli(args, out, err);
    CliRun r{code, json(), out.str(), err.str()};
    if (!r.raw_out.empty()) r.out = json::parse(r.raw_out);
    return r;
}

} // namespace

TEST_CASE("cli classify") {
    CliRun r = run({"classify", "--type", "A3", "--tau", "0,1,0"});
    REQUIRE(r.code == 0);
    CHECK(r.out["regular_nonempty"] == true);
    REQUIRE(r.out["singular"].size() == 2);
    CHECK(r.out["singular"][0]["type"] == "A1");
    CHECK(r.out["singular"][1]["type"] == "A1");
    CHECK(r.out["lambda"] == json::array({"-1", "0", "1", "0"}));
    CHECK(r.out["singular"][0]["mckay"]["order"] == 2);
    CHECK(r.out["singular"][0]["slice_delta"] == json::array({1, 1}));

    // same result through --lambda
    CliRun viaLambda = run({"classify", "--type", "A3", "--lambda", "-1,0,1,0"});
    CHECK(viaLambda.code == 0);
    CHECK(viaLambda.out == r.out);

    // deterministic output
    CliRun again = run({"classify", "--type", "A3", "--tau", "0,1,0"});
    CHECK(again.raw_out == r.raw_out);
}

TEST_CASE("cli bordism") {
    CliRun r = run({"bordism", "--base", "D4", "--parts", "A1,A1,A1"});
    REQUIRE(r.code == 0);
    CHECK(r.out["realizable"] == true);
    CHECK(r.out["witness_J"] == json::array({1, 3, 4}));

    CliRun no = run({"bordism", "--base", "A2", "--parts", "A1,A1"});
    CHECK(no.code == 0);
    CHECK(no.out == json{{"realizable", false}});
}

TEST_CASE("cli roots") {
    CliRun r = run({"roots", "--type", "E8", "--count"});
    REQUIRE(r.code == 0);
    CHECK(r.out["count"] == 240);
    CHECK_FALSE(r.out.contains("roots"));

    CliRun full = run({"roots", "--type", "A2"});
    CHECK(full.out["roots"].size() == 6);
    CHECK(full.out["maximal"] == json::array({1, 1}));
}

TEST_CASE("cli decompose and slice") {
    CliRun r = run({"decompose", "--type", "A3", "--tau", "0,1,0"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out["components"].size() == 2);
    CHECK(r.out["components"][0]["type"] == "A1");
    CHECK(r.out["components"][0]["mult"] == json::array({1}));

    CliRun s = run({"slice", "--type", "A3", "--tau", "0,1,0"});
    REQUIRE(s.code == 0);
    REQUIRE(s.out["slices"].size() == 2);
    CHECK(s.out["slices"][0]["delta"] == json::array({1, 1}));
    CHECK(s.out["slices"][0]["bonds"] == json::array({json::array({0, 1}), json::array({0, 1})}));
}

TEST_CASE("cli error handling") {
    // lambda off the admissible hyperplane: domain error, exit 2
    CliRun bad = run({"classify", "--type", "A3", "--lambda", "1,0,0,0"});
    CHECK(bad.code == 2);
    CHECK(bad.out.contains("error"));

    // malformed Gaussian rational: usage error, exit 1
    CliRun malformed = run({"classify", "--type", "A3", "--tau", "0,x,0"});
    CHECK(malformed.code == 1);
    CHECK(malformed.out.contains("error"));

    // unknown type label
    CliRun unknown = run({"roots", "--type", "Z9"});
    CHECK(unknown.code == 1);

    // wrong tau length
    CliRun short_tau = run({"classify", "--type", "A3", "--tau", "0,1"});
    CHECK(short_tau.code == 1);

    // both tau and lambda
    CliRun both = run({"classify", "--type", "A3", "--tau", "0,1,0", "--lambda", "0,0,0,0"});
    CHECK(both.code == 1);

    // missing subcommand
    CliRun none = run({});
    CHECK(none.code == 1);
}

TEST_CASE("cli verify single type") {
    CliRun r = run({"verify", "--type", "A2"});
    REQUIRE(r.code == 0);
    CHECK(r.out["failed"] == 0);
    CHECK(r.out["passed"].get<int>() > 5);
}

TEST_CASE("cli output file") {
    std::string path = "cli_test_output.json";
    CliRun r = run({"roots", "--type", "A2", "--count", "-o", path});
    REQUIRE(r.code == 0);
    CHECK(r.raw_out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json j = json::parse(in);
    CHECK(j["count"] == 6);
    in.close();
    std::remove(path.c_str());
}
