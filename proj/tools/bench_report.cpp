// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "bench_report.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "stlmon/generator.hpp"
#include "stlmon/oracle.hpp"

namespace stlmon {

std::vector<BenchFormula> default_bench_formulas() {
    return {
        {"phi1", "G (p & q)"},
        {"phi2", "G (p -> F q)"},
        {"phi3", "G (p -> F[0,1) q)"},
        {"phi4", "G (p | q)"},
        {"phi5", "p U q"},
        {"phi6", "G (p -> F[0,2) q)"},
    };
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// splitmix64: independent per-sample seeds from the master seed
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Sample {
    Verdict approx = Verdict::unknown;
    Verdict oracle = Verdict::unknown;
    bool infeasible = false;
    double approx_s = 0, oracle_s = 0;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

} // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    const std::vector<std::string> names{"p", "q"};
    std::vector<FormulaPtr> formulas;
    for (const auto& f : cfg.formulas) formulas.push_back(parse_formula(f.text, names, cfg.tick));

    const std::size_t nd = cfg.durations.size(), ne = cfg.epsilons.size(), nf = formulas.size();
    const std::size_t jobs = nd * ne * cfg.samples;
    std::vector<Sample> results(jobs * nf);

    const Tick quantum = to_ticks(cfg.quantum, cfg.tick);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t job = 0; job < static_cast<std::int64_t>(jobs); ++job) {
        const auto j = static_cast<std::size_t>(job);
        const std::size_t di = j / (ne * cfg.samples), ei = (j / cfg.samples) % ne, s = j % cfg.samples;
        GenParams gp;
        gp.n_signals = 2;
        gp.names = names;
        gp.duration = to_ticks(cfg.durations[di], cfg.tick);
        gp.epsilon = to_ticks(cfg.epsilons[ei], cfg.tick);
        gp.edges_per_signal = cfg.edges_per_signal;
        gp.quantum = quantum;
        gp.tick = cfg.tick;
        gp.seed = mix(cfg.seed ^ mix(di * 1'000'003 + ei * 1'009 + s));
        const DistributedSignal ds = generate(gp);
        EngineConfig ec;
        ec.backend = cfg.backend;
        ec.variant = cfg.variant;
        const MonitorContext ctx(ds, ec);
        for (std::size_t f = 0; f < nf; ++f) {
            Sample& out = results[j * nf + f];
            auto t0 = Clock::now();
            out.approx = monitor(ctx, formulas[f]);
            out.approx_s = seconds_since(t0);
            try {
                t0 = Clock::now();
                out.oracle = oracle_verdict_serial(ds, formulas[f]).verdict;
                out.oracle_s = seconds_since(t0);
            } catch (const OracleInfeasible&) {
                out.infeasible = true;
            }
        }
    }

    BenchReport report;
    report.config = cfg;
    for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t di = 0; di < nd; ++di)
            for (std::size_t ei = 0; ei < ne; ++ei) {
                BenchCell c;
                c.formula_id = cfg.formulas[f].id;
                c.formula = cfg.formulas[f].text;
                c.d = cfg.durations[di];
                c.epsilon = cfg.epsilons[ei];
                c.samples = cfg.samples;
                for (std::size_t s = 0; s < cfg.samples; ++s) {
                    const Sample& r = results[((di * ne + ei) * cfg.samples + s) * nf + f];
                    ++(r.approx == Verdict::true_ ? c.approx_true : r.approx == Verdict::false_ ? c.approx_false : c.approx_unknown);
                    if (r.infeasible) {
                        ++c.oracle_infeasible;
                        continue;
                    }
                    ++(r.oracle == Verdict::true_ ? c.oracle_true : r.oracle == Verdict::false_ ? c.oracle_false : c.oracle_unknown);
                    if (r.approx == Verdict::unknown && r.oracle != Verdict::unknown) ++c.false_positives;
                    c.approx_seconds += r.approx_s;
                    c.oracle_seconds += r.oracle_s;
                    c.combined_seconds += r.approx_s + (r.approx == Verdict::unknown ? r.oracle_s : 0.0);
                    ++c.timed_samples;
                }
                report.cells.push_back(std::move(c));
            }
    return report;
}

void write_bench_csv(const BenchReport& r, std::ostream& out) {
    const auto& cfg = r.config;
    out << "formula_id,formula,d,epsilon,samples,seed,tick,engine,backend,edges_per_signal,"
           "approx_true,approx_false,approx_unknown,oracle_true,oracle_false,oracle_unknown,oracle_infeasible,"
           "false_positives,fp_rate\n";
    const std::string engine = cfg.variant == Variant::adm ? "adm" : cfg.variant == Variant::adm_f ? "adm-f" : "adm-c";
    const std::string backend = cfg.backend == SetBackend::compact ? "compact" : "explicit";
    for (const auto& c : r.cells) {
        const std::size_t feasible = c.samples - c.oracle_infeasible;
        const double rate = feasible ? static_cast<double>(c.false_positives) / static_cast<double>(feasible) : 0.0;
        out << c.formula_id << ",\"" << c.formula << "\"," << c.d.to_decimal() << ',' << c.epsilon.to_decimal() << ','
            << c.samples << ',' << cfg.seed << ',' << cfg.tick.to_decimal() << ',' << engine << ',' << backend << ','
            << cfg.edges_per_signal << ',' << c.approx_true << ',' << c.approx_false << ',' << c.approx_unknown << ','
            << c.oracle_true << ',' << c.oracle_false << ',' << c.oracle_unknown << ',' << c.oracle_infeasible << ','
            << c.false_positives << ',' << fixed(rate, 4) << '\n';
    }
}

void write_timing_csv(const BenchReport& r, std::ostream& out) {
    out << "formula_id,d,epsilon,timed_samples,approx_ms_mean,oracle_ms_mean,combined_ms_mean,speedup,combined_speedup\n";
    for (const auto& c : r.cells) {
        const double n = c.timed_samples ? static_cast<double>(c.timed_samples) : 1.0;
        const double a = c.approx_seconds / n * 1e3, o = c.oracle_seconds / n * 1e3, m = c.combined_seconds / n * 1e3;
        out << c.formula_id << ',' << c.d.to_decimal() << ',' << c.epsilon.to_decimal() << ',' << c.timed_samples << ','
            << fixed(a, 4) << ',' << fixed(o, 4) << ',' << fixed(m, 4) << ',' << fixed(a > 0 ? o / a : 0.0, 2) << ','
            << fixed(m > 0 ? o / m : 0.0, 2) << '\n';
    }
}

} // namespace stlmon
