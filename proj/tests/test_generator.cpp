// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace stlmon;
using namespace stlmon::testing;

TEST_CASE("generator is deterministic per seed") {
    GenParams gp;
    gp.seed = 7;
    const auto a = generate(gp);
    const auto b = generate(gp);
    CHECK(a.signals == b.signals);
    gp.seed = 8;
    CHECK_FALSE(generate(gp).signals == a.signals);
}

TEST_CASE("generator edge cases") {
    GenParams gp;
    gp.edges_per_signal = 0;
    const auto ds = generate(gp);
    for (const auto& x : ds.signals) CHECK(x.edges.empty());
    CHECK(ds.names() == std::vector<std::string>{"x1", "x2"});
    gp.edges_per_signal = 10;  // only 9 interior grid points in (0, 10)
    CHECK_THROWS_AS(generate(gp), std::invalid_argument);
    gp.edges_per_signal = 9;
    CHECK(generate(gp).signals[0].edges.size() == 9);
}

TEST_CASE("generated traces are valid") {
    GenParams gp;
    gp.tick = Rational(1, 10);
    gp.duration = 100;
    gp.epsilon = 1;
    gp.n_signals = 3;
    gp.edges_per_signal = 4;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        gp.seed = s;
        const auto ds = generate(gp);
        CHECK(validate(ds).empty());
        for (const auto& x : ds.signals) {
            REQUIRE(x.edges.size() == 4);
            for (std::size_t k = 0; k < x.edges.size(); ++k)
                CHECK(x.edges[k].value != (k == 0 ? x.initial : x.edges[k - 1].value));
        }
    }
}

TEST_CASE("edge positions are uniform") {
    // one edge on (0, 10): positions 1..9 equally likely
    GenParams gp;
    gp.n_signals = 1;
    gp.edges_per_signal = 1;
    std::vector<double> counts(9, 0);
    const int n = 9000;
    Rng rng(3);
    for (int i = 0; i < n; ++i) counts[generate(gp, rng).signals[0].edges[0].time - 1] += 1;
    double chi2 = 0;
    for (double c : counts) chi2 += (c - n / 9.0) * (c - n / 9.0) / (n / 9.0);
    CHECK(chi2 < 26.1);  // 8 degrees of freedom, p = 0.001
}

TEST_CASE("random formulas") {
    Rng rng(5);
    const std::vector<std::string> names{"x1", "x2"};
    for (int i = 0; i < 200; ++i) {
        const auto f = random_formula(rng, names, small_formulas(false));
        CHECK_FALSE(contains_timed(*f));
        CHECK(depth(*f) <= 4);
    }
}
