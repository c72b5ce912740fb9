// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "stlmon/trace_io.hpp"

using namespace stlmon;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "stlmon");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string two_pulses = std::string(STLMON_SOURCE_DIR) + "/examples/two_pulses.json";

} // namespace

TEST_CASE("gamma command") {
    const auto r = cli({"gamma", "--trace", two_pulses, "--format", "records"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("gamma x1 [3,4)={01, 010, 1, 10}") != std::string::npos);
    const auto t = cli({"gamma", "--trace", two_pulses});
    CHECK(t.out.rfind("segments: [0,1) [1,3) [3,4) [4,5) [5,7) [7,8)", 0) == 0);
}

TEST_CASE("monitor exit codes") {
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "F x1"}).code == 0);
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "G x1"}).code == 1);
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "F (x1 & x2)"}).code == 2);
    const auto comb = cli({"monitor", "--trace", two_pulses, "--formula", "F (x1 & x2)", "--engine", "combined"});
    CHECK(comb.code == 0);
    CHECK(comb.out.find("engine_used: exact") != std::string::npos);
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "F (x1 &"}).code == 3);
    CHECK(cli({"monitor", "--trace", "/nonexistent.json", "--formula", "x1"}).code == 3);
    CHECK(cli({"monitor", "--formula", "x1"}).code == 3);
    const auto csv = cli({"monitor", "--trace", two_pulses, "--formula", "x1 & x1", "--format", "csv"});
    CHECK(csv.out.rfind("warning,verdict", 0) == 0);
}

TEST_CASE("compare and gen") {
    CHECK(cli({"compare", "--trace", two_pulses, "--formula", "G (x1 | x2)"}).code == 0);
    const auto g1 = cli({"gen", "--seed", "4", "--edges", "3"});
    const auto g2 = cli({"gen", "--seed", "4", "--edges", "3"});
    REQUIRE(g1.code == 0);
    CHECK(g1.out == g2.out);
    const auto ds = parse_trace(g1.out);
    CHECK(ds.signals.size() == 2);
    CHECK(cli({"gen", "--edges", "50"}).code == 3);
}

TEST_CASE("bench is reproducible") {
    const std::vector<std::string> args{"bench", "--samples", "2", "--durations", "8", "--epsilons", "1", "--edges", "1"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("formula_id,formula,", 0) == 0);
}

TEST_CASE("coarse engine on a predicate it cannot classify") {
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "G (x1 - x2 < 1)", "--engine", "adm-c"}).code == 3);
    CHECK(cli({"monitor", "--trace", two_pulses, "--formula", "G (x1 - x2 < 1)", "--engine", "adm-c", "--assume-monotone"}).code != 3);
}
