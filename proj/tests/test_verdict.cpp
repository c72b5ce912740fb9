// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace stlmon;
using namespace stlmon::testing;

namespace {

EngineConfig with_variant(Variant v, SetBackend b = SetBackend::explicit_sets) {
    EngineConfig cfg;
    cfg.variant = v;
    cfg.backend = b;
    return cfg;
}

// Integer-valued signals for the sum predicates.
DistributedSignal numeric_instance(Rng& rng) {
    GenParams gp;
    gp.n_signals = 2;
    gp.tick = Rational(1, 2);
    gp.quantum = 2;
    gp.duration = 2 * static_cast<Tick>(8 + rng.below(5));
    gp.epsilon = 2 * static_cast<Tick>(1 + rng.below(2));
    gp.edges_per_signal = rng.below(4);
    gp.alphabet = {Letter(0), Letter(1), Letter(2), Letter(3)};
    gp.seed = rng.next();
    return generate(gp);
}

} // namespace

TEST_CASE("verdict helpers") {
    CHECK(to_string(Verdict::true_) == "TRUE");
    CHECK(to_string(Verdict::false_) == "FALSE");
    CHECK(to_string(Verdict::unknown) == "UNKNOWN");
    CHECK(verdict_from_first({false, true}) == Verdict::true_);
    CHECK(verdict_from_first({true, false}) == Verdict::false_);
    CHECK(verdict_from_first({true, true}) == Verdict::unknown);
    CHECK_THROWS(verdict_from_first({false, false}));
    CHECK(negate(Verdict::true_) == Verdict::false_);
    CHECK(negate(Verdict::unknown) == Verdict::unknown);
}

TEST_CASE("verdicts on the running example") {
    const auto ds = running_example();
    for (auto backend : {SetBackend::explicit_sets, SetBackend::compact}) {
        const auto cfg = with_variant(Variant::adm, backend);
        CHECK(monitor(ds, parse(ds, "G x1"), cfg) == Verdict::false_);
        CHECK(monitor(ds, parse(ds, "x1"), cfg) == Verdict::false_);
        CHECK(monitor(ds, parse(ds, "F x1"), cfg) == Verdict::true_);
        CHECK(monitor(ds, parse(ds, "F (x1 & x2)"), cfg) == Verdict::unknown);
        CHECK(monitor(ds, parse(ds, "G (x1 | !x1)"), cfg) == Verdict::true_);
        // the rise may happen anywhere in (0,4)
        CHECK(monitor(ds, parse(ds, "F[0,1) x1"), cfg) == Verdict::unknown);
    }
}

TEST_CASE("predicate variants") {
    Rng rng(51);
    for (int i = 0; i < 100; ++i) {
        const auto ds = numeric_instance(rng);
        const auto phi = parse(ds, "x1 + x2 >= 3");
        const MonitorContext adm(ds, with_variant(Variant::adm));
        const MonitorContext fine(ds, with_variant(Variant::adm_f));
        const MonitorContext coarse(ds, with_variant(Variant::adm_c));
        for (std::size_t j = 0; j < adm.segmentation().size(); ++j) {
            const auto a = eval_predicate(*phi->pred, j, adm);
            const auto f = eval_predicate(*phi->pred, j, fine);
            const auto c = eval_predicate(*phi->pred, j, coarse);
            CHECK(std::includes(f.begin(), f.end(), a.begin(), a.end()));
            // monotone predicate: the extremes reach every truth value
            CHECK(c == f);
        }
    }
}

TEST_CASE("coarse variant rejects predicates it cannot classify") {
    const auto ds = running_example();
    const auto phi = parse(ds, "x1 - x2 >= 1");
    CHECK_THROWS_AS(monitor(ds, phi, with_variant(Variant::adm_c)), std::invalid_argument);
    auto cfg = with_variant(Variant::adm_c);
    cfg.assume_monotone = true;
    CHECK_NOTHROW(monitor(ds, phi, cfg));
    CHECK_NOTHROW(monitor(ds, phi, with_variant(Variant::adm_f)));
}

TEST_CASE("variant ordering on monotone sums") {
    Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        const auto ds = numeric_instance(rng);
        const auto c = static_cast<int>(rng.below(6));
        const auto phi = parse(ds, "G (x1 + x2 > " + std::to_string(c) + ")");
        const auto vc = monitor(ds, phi, with_variant(Variant::adm_c));
        const auto vf = monitor(ds, phi, with_variant(Variant::adm_f));
        const auto va = monitor(ds, phi, with_variant(Variant::adm));
        if (vc != Verdict::unknown) CHECK(vf == vc);
        if (vf != Verdict::unknown) CHECK(va == vf);
    }
}

TEST_CASE("monitoring is deterministic") {
    Rng rng(57);
    for (int i = 0; i < 50; ++i) {
        const auto ds = small_instance(rng);
        const auto phi = random_formula(rng, ds.names(), small_formulas(true));
        CHECK(monitor(ds, phi) == monitor(ds, phi));
    }
}

TEST_CASE("relative mode") {
    const auto ds = running_example();
    EngineConfig cfg;
    cfg.relative_agent = "x1";
    const MonitorContext ctx(ds, cfg);
    for (std::size_t j = 0; j < ctx.segmentation().size(); ++j) CHECK(ctx.gamma().at(0, j).size() == 1);
    // x1 is known exactly, so its own formulas are decided
    CHECK(monitor(ctx, parse(ds, "F[0,3) x1")) == Verdict::true_);
    CHECK(monitor(ctx, parse(ds, "F[0,2) x1")) == Verdict::false_);
    CHECK(ctx.trace().reference == std::size_t{0});
    cfg.relative_agent = "nope";
    CHECK_THROWS(MonitorContext(ds, cfg));
}
