// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "bench_report.hpp"
#include "cli.hpp"
#include "helpers.hpp"
#include "stlmon/trace_io.hpp"

using namespace stlmon;
using namespace stlmon::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << std::endl;
    if (!o.pass) ++failures;
}

// Instances for the randomized criteria: up to 3 Boolean signals with up to 3
// edges each, on whole time units.
DistributedSignal instance(Rng& rng) { return small_instance(rng, 3, 3); }

Outcome example_gamma() {
    const auto t0 = Clock::now();
    const std::string path = std::string(STLMON_SOURCE_DIR) + "/examples/two_pulses.json";
    const char* argv[] = {"stlmon", "gamma", "--trace", path.c_str(), "--format", "records"};
    std::ostringstream out, err;
    const int rc = run_cli(6, argv, out, err);
    const double secs = seconds_since(t0);
    const std::string expected =
        "gamma x1 [0,1)={0, 01}\n"
        "gamma x1 [1,3)={0, 01, 1}\n"
        "gamma x1 [3,4)={01, 010, 1, 10}\n"
        "gamma x1 [4,5)={0, 1, 10}\n"
        "gamma x1 [5,7)={0, 10}\n"
        "gamma x1 [7,8)={0}\n"
        "gamma x2 [0,1)={0}\n"
        "gamma x2 [1,3)={0, 01}\n"
        "gamma x2 [3,4)={0, 01, 1}\n"
        "gamma x2 [4,5)={01, 010, 1, 10}\n"
        "gamma x2 [5,7)={0, 1, 10}\n"
        "gamma x2 [7,8)={0, 10}\n";
    const auto ds = load_trace(path);
    const auto segs = canonical_segmentation(ds).segments();
    const bool seg_ok = segs == std::vector<Segment>{{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 7}, {7, 8}};
    const bool ok = rc == 0 && seg_ok && out.str() == expected && secs < 1.0;
    std::ostringstream d;
    d << "segmentation " << (seg_ok ? "matches" : "differs") << ", 12 cells "
      << (out.str() == expected ? "match" : "differ") << ", " << secs * 1000 << " ms";
    return {ok, d.str()};
}

Outcome worked_examples() {
    const auto ds = running_example();
    std::vector<std::string> bad;
    auto expect = [&](const std::string& what, const ExprSet& got, const ExprSet& want) {
        if (got != want) bad.push_back(what + " = " + to_string(got));
    };
    const MonitorContext ctx(ds);
    const auto conj = parse(ds, "x1 & x2");
    expect("conj [3,4)", eval_untimed(conj, units(3, 4), ctx), word_set({"0", "01", "010", "1", "10"}));
    expect("F conj [3,4)", eval_untimed(make_eventually(conj), units(3, 4), ctx), word_set({"0", "1", "10"}));
    expect("conj [5,7)", eval_untimed(conj, units(5, 7), ctx), word_set({"0", "10"}));
    expect("conj [7,8)", eval_untimed(conj, units(7, 8), ctx), word_set({"0"}));

    const auto x1 = parse(ds, "x1");
    const auto p123 = word_set({"0", "01", "1"});
    const auto p4 = word_set({"0", "01", "010", "0101", "01010", "1", "10", "101", "1010"});
    expect("P1", profile(x1, units(1, 3), {2, 4}, ctx), p123);
    expect("P2", profile(x1, units(1, 3), {3, 5}, ctx), p123);
    expect("P3", profile(x1, units(1, 3), {4, 6}, ctx), p123);
    expect("P4", profile(x1, units(1, 3), {5, 7}, ctx), p4);
    const auto classes = pfs(x1, units(1, 3), TimeInterval{0, Tick{2}, true, false}, ctx);
    if (classes != std::vector<ExprSet>{p123, p123, p123, p4}) bad.push_back("pfs has " + std::to_string(classes.size()) + " classes");

    EngineConfig literal;
    literal.timed_rule = TimedRule::literal;
    const MonitorContext lctx(ds, literal);
    expect("F[0,1) x1 [1,3)", eval_timed_until(make_constant(true), x1, TimeInterval{0, Tick{2}, true, false}, units(1, 3), lctx), p4);

    if (bitwise_unary(word("010"), Unary::eventually) != word("110")) bad.push_back("E(010)");
    if (bitwise_unary(word("010"), Unary::always) != word("000")) bad.push_back("A(010)");
    std::string d = bad.empty() ? "conjunction and eventually sets, four window profiles, timed eventually set, E/A all exact" : "";
    for (const auto& b : bad) d += b + "; ";
    return {bad.empty(), d};
}

Outcome consistency() {
    Rng rng(1001);
    std::size_t traces = 0, failures_here = 0, skipped = 0, n = 0;
    OracleOptions opts;
    opts.max_traces = 20'000;  // keeps the suite fast; larger instances are drawn again
    while (n < 1000) {
        const auto ds = instance(rng);
        const Tick grid = default_grid(ds);
        const auto seg = canonical_segmentation(ds);
        const GammaTable table(ds, seg);
        std::size_t local_fail = 0;
        try {
            traces += enumerate_traces(
                ds, grid,
                [&](std::span<const Signal> w) {
                    for (std::size_t s = 0; s < w.size(); ++s)
                        if (!is_consistent(w[s], s, seg, table)) ++local_fail;
                    return true;
                },
                opts);
        } catch (const OracleInfeasible&) {
            ++skipped;
            continue;
        }
        failures_here += local_fail;
        ++n;
    }
    std::ostringstream d;
    d << n << " instances, " << traces << " enumerated traces, " << failures_here << " inconsistent (" << skipped
      << " instances above 20000 retimings redrawn)";
    return {failures_here == 0, d.str()};
}

Outcome soundness() {
    Rng rng(2002);
    std::size_t checked = 0, conclusive = 0, unsound = 0, infeasible = 0, fp = 0;
    for (int i = 0; checked < 1200; ++i) {
        const auto ds = instance(rng);
        const auto phi = random_formula(rng, ds.names(), small_formulas(i % 2 == 1));
        const Verdict a = monitor(ds, phi);
        OracleResult o;
        try {
            o = oracle_verdict(ds, phi);
        } catch (const OracleInfeasible&) {
            ++infeasible;
            continue;
        }
        ++checked;
        if (a == Verdict::unknown) {
            fp += o.verdict != Verdict::unknown;
            continue;
        }
        ++conclusive;
        if (a != o.verdict) {
            ++unsound;
            std::cerr << "unsound: " << to_string(*phi, ds.tick) << '\n' << format_trace(ds);
        }
    }
    std::ostringstream d;
    d << checked << " pairs (half timed), " << conclusive << " conclusive, " << unsound << " disagreements, " << fp
      << " false positives, " << infeasible << " skipped as infeasible";
    return {unsound == 0, d.str()};
}

Outcome backends() {
    Rng rng(3003);
    std::size_t mismatches = 0, segments = 0, set_equal = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const auto ds = instance(rng);
        const auto phi = random_formula(rng, ds.names(), small_formulas(i % 2 == 1));
        EngineConfig ce, cc;
        cc.backend = SetBackend::compact;
        const MonitorContext xe(ds, ce), xc(ds, cc);
        if (monitor(xe, phi) != monitor(xc, phi)) ++mismatches;
        Evaluator<ExplicitBackend> ee(xe);
        Evaluator<CompactBackend> ec(xc);
        const auto& se = ee.eval(phi);
        const auto& sc = ec.eval(phi);
        for (std::size_t j = 0; j < se.size(); ++j, ++segments) set_equal += summarize(se[j]) == sc[j];
    }
    std::ostringstream d;
    d << n << " instances, " << mismatches << " verdict mismatches; set-level agreement " << set_equal << "/" << segments
      << " segments (" << (100.0 * static_cast<double>(set_equal) / static_cast<double>(segments)) << "%)";
    return {mismatches == 0, d.str()};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

Outcome speedup() {
    Rng rng(4004);
    std::vector<double> ratios;
    std::size_t infeasible = 0;
    const std::vector<std::string> specs{"G (x1 -> F[0,2] (x2 | x3))", "G (x1 & x2 -> x3)", "F (x1 & x2 & x3)"};
    for (int i = 0; ratios.size() < 50 && i < 200; ++i) {
        GenParams gp;
        gp.n_signals = 3;
        gp.edges_per_signal = 4;
        gp.tick = Rational(1, 2);
        gp.quantum = 2;
        gp.duration = 40;
        gp.epsilon = 2;
        gp.seed = rng.next();
        const auto ds = generate(gp);
        const auto phi = parse(ds, specs[static_cast<std::size_t>(i) % specs.size()]);
        auto t0 = Clock::now();
        const Verdict a = monitor(ds, phi);
        const double ta = seconds_since(t0);
        t0 = Clock::now();
        try {
            (void)oracle_verdict(ds, phi);
        } catch (const OracleInfeasible&) {
            ++infeasible;
            continue;
        }
        const double to = seconds_since(t0);
        (void)a;
        ratios.push_back(to / std::max(ta, 1e-9));
    }
    const double m = ratios.empty() ? 0 : median(ratios);
    std::ostringstream d;
    d << ratios.size() << " instances (3 signals x 4 edges), median oracle/approximate wall-time ratio " << m << "x"
      << (infeasible ? ", " + std::to_string(infeasible) + " infeasible" : "");
    return {ratios.size() >= 50 && m >= 100, d.str()};
}

Outcome combined() {
    Rng rng(5005);
    std::size_t n = 0, bad = 0, fallbacks = 0;
    for (int i = 0; n < 500; ++i) {
        const auto ds = instance(rng);
        const auto phi = random_formula(rng, ds.names(), small_formulas(i % 2 == 1));
        CombinedResult c;
        try {
            c = monitor_combined(ds, phi);
        } catch (const OracleInfeasible&) {
            continue;
        }
        ++n;
        const Verdict a = monitor(ds, phi);
        if (a != c.approximate) ++bad;
        if (a == Verdict::unknown) {
            ++fallbacks;
            if (c.verdict != oracle_verdict(ds, phi).verdict || c.engine != EngineUsed::exact) ++bad;
        } else if (c.verdict != a || c.engine != EngineUsed::approximate) {
            ++bad;
        }
    }
    std::ostringstream d;
    d << n << " instances, " << fallbacks << " oracle fallbacks, " << bad << " contract violations";
    return {bad == 0, d.str()};
}

Outcome variants() {
    Rng rng(6006);
    std::size_t bad = 0, conclusive[3] = {0, 0, 0};
    const int n = 500;
    for (int i = 0; i < n; ++i) {
        GenParams gp;
        gp.n_signals = 2;
        gp.tick = Rational(1, 2);
        gp.quantum = 2;
        gp.duration = 2 * static_cast<Tick>(8 + rng.below(5));
        gp.epsilon = 2 * static_cast<Tick>(1 + rng.below(2));
        gp.edges_per_signal = rng.below(4);
        gp.alphabet = {Letter(0), Letter(1), Letter(2), Letter(3)};
        gp.seed = rng.next();
        const auto ds = generate(gp);
        const auto phi = parse(ds, "G (x1 + x2 > " + std::to_string(rng.below(6)) + ")");
        Verdict v[3];
        for (int k = 0; k < 3; ++k) {
            EngineConfig cfg;
            cfg.variant = k == 0 ? Variant::adm_c : k == 1 ? Variant::adm_f : Variant::adm;
            v[k] = monitor(ds, phi, cfg);
            conclusive[k] += v[k] != Verdict::unknown;
        }
        if (v[0] != Verdict::unknown && v[1] != v[0]) ++bad;
        if (v[1] != Verdict::unknown && v[2] != v[1]) ++bad;
    }
    std::ostringstream d;
    d << n << " instances of G(x1 + x2 > c); conclusive: adm-c " << conclusive[0] << ", adm-f " << conclusive[1]
      << ", adm " << conclusive[2] << "; " << bad << " ordering violations";
    return {bad == 0, d.str()};
}

Outcome bench_determinism() {
    BenchConfig cfg;
    cfg.samples = 5;
    auto csv = [&] {
        std::ostringstream o;
        write_bench_csv(run_bench(cfg), o);
        return o.str();
    };
    const auto a = csv(), b = csv();
    const bool header = a.rfind("formula_id,formula,d,epsilon", 0) == 0;
    const auto rows = static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n'));
    std::ostringstream d;
    d << rows - 1 << " heatmap rows for phi1-phi6, two runs " << (a == b ? "byte-identical" : "differ");
    return {a == b && header && rows == 1 + 6 * cfg.durations.size() * cfg.epsilons.size(), d.str()};
}

} // namespace

int main(int argc, char** argv) {
    // optional arguments select criteria by number
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    auto run = [&](int id, const std::string& name, Outcome (*fn)()) {
        if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) report(id, name, fn());
    };
    run(1, "gamma table of the running example", example_gamma);
    run(2, "worked examples", worked_examples);
    run(3, "enumerated traces are consistent", consistency);
    run(4, "soundness against the oracle", soundness);
    run(5, "explicit and compact backends agree", backends);
    run(6, "speedup over the enumeration oracle", speedup);
    run(7, "combined-mode contract", combined);
    run(8, "variant ordering on monotone predicates", variants);
    run(9, "bench report is reproducible", bench_determinism);
    return failures == 0 ? 0 : 1;
}
