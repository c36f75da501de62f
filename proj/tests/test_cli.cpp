#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "mopkit/cli.hpp"

using nlohmann::json;

namespace {
struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mopkit::run_cli_args(args, out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("coeffs: jacobi frozen example") {
    auto r = run({"coeffs", "--family", "jacobi", "--params", R"({"alpha":"0","beta":"0"})",
                  "--n", "2"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["family"] == "jacobi");
    CHECK(doc["variable"] == "t");
    CHECK(doc["coeffs"] == json::array({"1", "-6", "6"}));
}

TEST_CASE("coeffs: wilson frozen example in s") {
    auto r = run({"coeffs", "--family", "wilson", "--params",
                  R"({"a":"1","b":"2","c":"3","d":"4"})", "--n", "1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["variable"] == "s");
    CHECK(doc["coeffs"] == json::array({"50", "10"}));
}

TEST_CASE("coeffs: zero index gives [\"1\"]") {
    auto r = run({"coeffs", "--family", "charlier", "--params", R"({"a":["1","2"]})", "--n",
                  "0,0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["coeffs"] == json::array({"1"}));
}

TEST_CASE("eval evaluates exactly") {
    auto r = run({"eval", "--family", "jacobi", "--params", R"({"alpha":"0","beta":"0"})",
                  "--n", "2", "--at", "3/2"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    // 1 - 6(3/2) + 6(9/4) = 1 - 9 + 27/2 = 11/2
    CHECK(doc["value"] == "11/2");
}

TEST_CASE("moments command") {
    auto r = run({"moments", "--family", "wilson", "--params",
                  R"({"a":"1","b":"2","c":"3","d":"4"})", "--count", "3"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["moments"] == json::array({"1", "-5", "401/11"}));
}

TEST_CASE("verify: pass and exit 0") {
    auto r = run({"verify", "--family", "jacobi-pineiro", "--params",
                  R"({"alpha":["1/3","3/4"],"beta":"1/2"})", "--n", "2,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"]["orth"]["pass"] == true);
    for (const auto& res : doc["checks"]["orth"]["residuals"]) CHECK(res["value"] == "0");
    CHECK(doc["checks"]["repr"]["routes"].size() == 3);
}

TEST_CASE("verify: admissibility violation exits 2 with JSON error") {
    auto r = run({"verify", "--family", "jacobi-pineiro", "--params",
                  R"({"alpha":["1/2","3/2"],"beta":"0"})", "--n", "1,1"});
    CHECK(r.code == 2);
    json error = json::parse(r.err);
    CHECK(error["error"]["kind"] == "admissibility");
}

TEST_CASE("verify: usage error on unknown family") {
    auto r = run({"coeffs", "--family", "nope", "--params", "{}", "--n", "1"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.err)["error"]["kind"] == "usage");
}

TEST_CASE("scheme graph content") {
    auto r = run({"scheme"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["nodes"].size() >= 16);
    bool cdh_edge = false, hermite_edge = false;
    for (const auto& e : doc["edges"]) {
        if (e["source"] == "multiple-wilson" && e["target"] == "multiple-continuous-dual-hahn")
            cdh_edge = true;
        if (e["source"] == "jacobi-pineiro" && e["target"] == "multiple-hermite" &&
            e["oracle_target"] == true)
            hermite_edge = true;
    }
    CHECK(cdh_edge);
    CHECK(hermite_edge);
}

TEST_CASE("table command enumerates deterministically") {
    auto r = run({"table", "--family", "charlier", "--params", R"({"a":["1","2"]})", "--nmax",
                  "1,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["entries"].size() == 4);
    CHECK(doc["entries"][0]["n"] == json::array({0, 0}));
}

TEST_CASE("byte-identical output for identical args") {
    std::vector<std::string> args = {"verify", "--family", "charlier", "--count", "3",
                                     "--seed", "11", "--m", "2", "--checks", "orth,repr"};
    auto r1 = run(args);
    auto r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
}

TEST_CASE("multiple-hermite coeffs via the oracle") {
    auto r = run({"coeffs", "--family", "multiple-hermite", "--params", R"({"c":["1","2"]})",
                  "--n", "1,1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["coeffs"] == json::array({"0", "-3/2", "1"}));
}

TEST_CASE("csv format emits flat rows") {
    auto r = run({"coeffs", "--family", "jacobi", "--params", R"({"alpha":"0","beta":"0"})",
                  "--n", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("coeffs[0],1") != std::string::npos);
    CHECK(r.out.find("coeffs[1],-2") != std::string::npos);
}
