#include "commands.hpp"

#include <doctest.h>

#include <sstream>

using namespace stair::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("accpoint prints the decimal and the exact surd") {
    const auto r = call({"accpoint", "--expansion", "4;2,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5.17022") != std::string::npos);
    CHECK(r.out.find("(59+9*sqrt(37))/22") != std::string::npos);
    CHECK(r.out.rfind("# tool: stair", 0) == 0);
}

TEST_CASE("corners of the ball at n = 2") {
    const auto r = call({"corners", "--case", "(3)", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    const auto& rows = doc["results"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[1]["kind"] == "inner");
    CHECK(rows[1]["x"] == "25/4");
    CHECK(rows[1]["x_decimal"] == "6.2500000000000000000");
    CHECK(doc["config"]["version"] == kToolVersion);
}

TEST_CASE("embedding function CSV shape") {
    const auto r = call({"embedfn", "--case", "(3)", "--amin", "1", "--amax", "2", "--astep", "1/10", "--count", "3000"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int comments = 0, rows = 0;
    std::string header;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) ++comments;
        else if (header.empty()) header = line;
        else ++rows;
    }
    CHECK(header == "a,a_decimal,value,value_decimal,witness_k,certified,below_volume,volume,volume_decimal");
    CHECK(rows == 11);
    CHECK(comments >= 2);
}

TEST_CASE("identical config gives byte-identical output") {
    const std::vector<std::string> args{"ehrhart", "--case", "(3;1,1)", "--tmax", "300"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> sampled{"embedfn", "--expansion", "4;2,1", "--amax", "3", "--astep", "1/7",
                                           "--count", "2000"};
    CHECK(call(sampled).out == call(sampled).out);
}

TEST_CASE("the header round-trips to a command reproducing the report") {
    const std::vector<std::vector<std::string>> runs = {
        {"capacities", "--expansion", "4;2,1", "--count", "12"},
        {"ctheta", "--K", "61/9", "--nmax", "50", "--format", "json"},
        {"atf", "recurse", "--case", "(3;1)", "--steps", "4"},
        {"reflexive"},
        {"graph", "--case", "(4;2,2)", "--astep", "1/5"},
    };
    for (const auto& args : runs) {
        const auto first = call(args);
        REQUIRE(first.code == 0);
        const auto again = call(args_from_config(read_config(first.out)));
        CHECK(again.code == 0);
        CHECK(again.out == first.out);
    }
}

TEST_CASE("errors are JSON with distinct exit codes") {
    auto r = call({"accpoint", "--case", "(9;9)"});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.err)["error"]["kind"] == "domain");

    r = call({"weights", "--a", "one"});
    CHECK(r.code == 2);

    r = call({"capacities"});
    CHECK(r.code == 2);

    r = call({"nosuchcommand"});
    CHECK(r.code == 2);
    CHECK(Json::parse(r.err)["error"]["kind"] == "config");

    r = call({"capfn", "--expansion", "4;2,1", "--tmax", "30"});
    CHECK(r.code == 3);
    CHECK(Json::parse(r.err)["error"]["kind"] == "shortfall");

    r = call({"accpoint", "--case", "(3)", "--format", "xml"});
    CHECK(r.code == 2);
}

TEST_CASE("every subcommand answers") {
    const std::vector<std::vector<std::string>> runs = {
        {"weights", "--a", "13/5"},
        {"obstruction", "--case", "(3)", "--count", "5000"},
        {"identities", "--case", "(3;1)", "--nmax", "30"},
        {"latticepath", "--case", "(3;1,1)", "--n", "4"},
        {"latticepath", "--case", "(3)", "--k", "4"},
        {"atf", "replay", "--case", "(3;1,1,1,1)"},
        {"ehrhart", "--expansion", "4;2,1", "--tmax", "50"},
        {"capfn", "--expansion", "3;1^5", "--tmax", "120"},
        {"reflexive", "--expansion", "3;1,1"},
    };
    for (const auto& args : runs) {
        CAPTURE(args[0]);
        const auto r = call(args);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
    }
}

TEST_CASE("help and version") {
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"--version"}).out.find(kToolVersion) != std::string::npos);
}

}
