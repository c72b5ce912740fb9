// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"

using namespace stlmon;
using namespace stlmon::testing;

namespace {

EngineConfig literal() {
    EngineConfig cfg;
    cfg.timed_rule = TimedRule::literal;
    return cfg;
}

PlacedInterval placed(Tick lo, Tick hi, bool lc = true, bool hc = false) { return {lo, hi, lc, hc}; }

} // namespace

TEST_CASE("kappa") {
    const auto ds = running_example();
    const MonitorContext ctx(ds);
    const auto x1 = parse(ds, "x1");
    // r = 3.5: no segment between [1,3) and [3,4)
    CHECK(kappa(x1, units(1, 3), placed(5, 7), ctx) == word_set({""}));
    // r = 4.5: [3,4) lies in between
    CHECK(kappa(x1, units(1, 3), placed(7, 9), ctx) == gamma(ds, 0, units(3, 4)));
    CHECK(kappa(x1, units(5, 7), placed(13, 15), ctx) == word_set({""}));
}

TEST_CASE("profiles of the running example") {
    const auto ds = running_example();
    const MonitorContext ctx(ds);
    const auto x1 = parse(ds, "x1");
    const auto p1 = word_set({"0", "01", "1"});
    CHECK(profile(x1, units(1, 3), placed(2, 4), ctx) == p1);
    CHECK(profile(x1, units(1, 3), placed(5, 7), ctx) ==
          word_set({"0", "01", "010", "0101", "01010", "1", "10", "101", "1010"}));
    CHECK(profile(x1, units(1, 3), placed(8, 10), ctx) == word_set({""}));

    const auto classes = pfs(x1, units(1, 3), TimeInterval{0, Tick{2}, true, false}, ctx);
    REQUIRE(classes.size() == 4);
    CHECK(classes[0] == p1);
    CHECK(classes[1] == p1);
    CHECK(classes[2] == p1);
    CHECK(classes[3] == word_set({"0", "01", "010", "0101", "01010", "1", "10", "101", "1010"}));
    CHECK_THROWS(pfs(x1, units(1, 3), TimeInterval{0, std::nullopt, true, false}, ctx));
}

TEST_CASE("timed until, literal rule") {
    const auto ds = running_example();
    const MonitorContext ctx(ds, literal());
    const auto one = parse(ds, "true");
    const auto x1 = parse(ds, "x1");
    const TimeInterval J{0, Tick{2}, true, false};
    CHECK(eval_timed_until(one, x1, J, units(1, 3), ctx) ==
          word_set({"0", "01", "010", "0101", "01010", "1", "10", "101", "1010"}));
    Evaluator<ExplicitBackend> ev(ctx);
    const auto& tau = ev.eval(x1);
    const auto classes = ev.pfs(tau, 1, J);
    ExprSet images;
    for (const auto& u : classes[3]) images.insert(destutter(bitwise_unary(u, Unary::eventually)));
    CHECK(images == word_set({"0", "10", "1"}));
    images.clear();
    for (const auto& u : classes[0]) images.insert(destutter(bitwise_unary(u, Unary::eventually)));
    CHECK(images == word_set({"0", "1"}));
}

TEST_CASE("timed eventually of a constant signal") {
    DistributedSignal ds;
    ds.duration = 10;
    ds.epsilon = 1;
    ds.signals = {{"z", Letter(0), {}}, boolean_signal("y", 0, {3, 6})};
    for (auto cfg : {EngineConfig{}, literal()}) {
        const MonitorContext ctx(ds, cfg);
        Evaluator<ExplicitBackend> ev(ctx);
        for (const auto& s : ev.eval(parse(ds, "F[0,1) z"))) CHECK(s == word_set({"0"}));
    }
}

TEST_CASE("a window covering the domain agrees with the untimed operator") {
    Rng rng(29);
    for (int i = 0; i < 150; ++i) {
        auto ds = small_instance(rng);
        const auto names = ds.names();
        auto a = random_formula(rng, names, small_formulas(false));
        auto b = random_formula(rng, names, small_formulas(false));
        const MonitorContext ctx(ds);
        Evaluator<ExplicitBackend> ev(ctx);
        const TimeInterval all{0, ds.duration, true, false};
        const auto untimed = ExplicitBackend::first(ev.eval(make_until(a, b)).front());
        const auto timed = ExplicitBackend::first(ev.eval(make_until(a, b, all)).front());
        // the timed evaluation may only lose precision
        if (timed.zero != timed.one) CHECK(timed == untimed);
    }
}

TEST_CASE("placement classes have uniform profiles") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        // scale by 4 so that every open class contains several sample placements
        auto ds = scale_trace(small_instance(rng, 2, 2), 4);
        const MonitorContext ctx(ds);
        Evaluator<ExplicitBackend> ev(ctx);
        const auto& tau = ev.eval(parse(ds, ds.names().front()));
        const Tick a = 4 * static_cast<Tick>(rng.below(3)), b = a + 4 * static_cast<Tick>(1 + rng.below(2));
        const TimeInterval J{a, b, rng.coin(), rng.coin()};
        for (std::size_t j = 0; j < ctx.segmentation().size(); ++j) {
            const auto classes = ev.placements(j, J);
            const Segment I = ctx.segmentation()[j];
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (classes[c].point) continue;
                const Tick from = classes[c - 1].t2 / 2;
                const Tick to = c + 1 < classes.size() ? classes[c + 1].t2 / 2 : I.hi;
                auto window = [&](Tick t2) {
                    return ev.window_profile(tau, t2 + 2 * J.lo, t2 + 2 * *J.hi, J.lo_closed, J.hi_closed);
                };
                const auto rep = window(classes[c].t2);
                for (Tick t = from + 1; t < to; ++t) CHECK(window(2 * t) == rep);
            }
        }
    }
}

TEST_CASE("change bounds") {
    const auto ds = running_example();
    CHECK(change_bound(*parse(ds, "x1"), ds) == 2);
    CHECK(change_bound(*parse(ds, "x1 & !x2"), ds) == 4);
    CHECK(change_bound(*parse(ds, "F x1"), ds) == 2);
    CHECK(change_bound(*parse(ds, "F[0,1) x1"), ds) == 6);
    CHECK(change_bound(*parse(ds, "G[1,1] x1"), ds) == 3);
    CHECK(change_bound(*parse(ds, "x1 U[0,1] x2"), ds) == 12);
    // every synchronous retiming respects the bound
    const auto phi = parse(ds, "F[0,1) (x1 & x2)");
    const auto bound = change_bound(*phi, ds);
    enumerate_traces(ds, 1, [&](std::span<const Signal> w) {
        std::size_t changes = 0;
        bool prev = false;
        for (Tick t = 0; t < ds.duration; ++t) {
            std::vector<Signal> shifted(w.begin(), w.end());
            for (auto& x : shifted)
                for (auto& e : x.edges) e.time -= t;
            // satisfaction at t: shift the trace left by t (edges before 0 fold into the initial value)
            for (auto& x : shifted) {
                Letter v = x.initial;
                std::vector<Edge> kept;
                for (const auto& e : x.edges)
                    if (e.time <= 0) v = e.value;
                    else kept.push_back(e);
                x.initial = v;
                x.edges = kept;
            }
            const bool now = eval_sync(shifted, ds.duration - t, *phi);
            if (t > 0 && now != prev) ++changes;
            prev = now;
        }
        CHECK(changes <= bound);
        return true;
    });
}

TEST_CASE("first letters of a bitwise-until product from word shapes") {
    Rng rng(37);
    for (int i = 0; i < 2000; ++i) {
        const auto a = random_set(rng, 3, 5);
        const auto b = random_set(rng, 3, 5);
        const auto want = ExplicitBackend::first(ExplicitBackend::until(a, b, true, false));
        CHECK(until_first(ExplicitBackend::shapes(a), ExplicitBackend::shapes(b)) == want);
        CHECK(until_first(CompactBackend::shapes(summarize(a)), CompactBackend::shapes(summarize(b))) == want);
    }
}
