// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench_report.hpp"
#include "stlmon/generator.hpp"
#include "stlmon/oracle.hpp"
#include "stlmon/trace_io.hpp"

namespace stlmon {
namespace {

enum class Format { text, csv, records };

struct Common {
    std::string trace, formula, engine = "adm", backend = "explicit", relative, epsilon, tick, out, format = "text";
    bool assume_monotone = false;
};

const std::map<std::string, Format> formats{{"text", Format::text}, {"csv", Format::csv}, {"records", Format::records}};

void add_common(CLI::App* cmd, Common& c, bool with_formula) {
    cmd->add_option("--trace", c.trace, "trace file (JSON)")->required();
    if (with_formula) cmd->add_option("--formula", c.formula, "STL formula")->required();
    cmd->add_option("--relative", c.relative, "reference agent for relative mode");
    cmd->add_option("--epsilon", c.epsilon, "override the trace's clock skew bound");
    cmd->add_option("--tick", c.tick, "override the trace's time quantum");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "records"}));
    cmd->add_option("--out", c.out, "write output to this file");
}

DistributedSignal load(const Common& c) {
    TraceOverrides over;
    if (!c.tick.empty()) over.tick = Rational::parse(c.tick);
    if (!c.epsilon.empty()) over.epsilon = Rational::parse(c.epsilon);
    return load_trace(c.trace, over);
}

EngineConfig engine_config(const Common& c) {
    EngineConfig cfg;
    if (c.engine == "adm-f") cfg.variant = Variant::adm_f;
    else if (c.engine == "adm-c") cfg.variant = Variant::adm_c;
    cfg.backend = c.backend == "compact" ? SetBackend::compact : SetBackend::explicit_sets;
    if (!c.relative.empty()) cfg.relative_agent = c.relative;
    cfg.assume_monotone = c.assume_monotone;
    return cfg;
}

int code_of(Verdict v) {
    switch (v) {
    case Verdict::true_: return exit_true;
    case Verdict::false_: return exit_false;
    default: return exit_unknown;
    }
}

// Key/value pairs rendered in the selected format.
void emit(std::ostream& os, Format f, const std::vector<std::pair<std::string, std::string>>& kv) {
    switch (f) {
    case Format::text:
        for (const auto& [k, v] : kv) os << k << ": " << v << '\n';
        break;
    case Format::records:
        for (const auto& [k, v] : kv) os << k << '=' << v << '\n';
        break;
    case Format::csv:
        for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].first;
        os << '\n';
        for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? "," : "") << kv[i].second;
        os << '\n';
        break;
    }
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write '" + path + "'");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

int cmd_monitor(const Common& c, std::ostream& out) {
    const DistributedSignal ds = load(c);
    const auto phi = parse_formula(c.formula, ds.names(), ds.tick);
    const Format fmt = formats.at(c.format);
    Output o(c.out, out);
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& w : check_copyless(*phi)) kv.emplace_back("warning", w);
    Verdict v;
    if (c.engine == "oracle") {
        const auto r = oracle_verdict(c.relative.empty() ? ds : apply_relative(ds, c.relative), phi);
        v = r.verdict;
        kv.emplace_back("verdict", to_string(v));
        kv.emplace_back("engine", "oracle");
        kv.emplace_back("traces", std::to_string(r.traces));
        kv.emplace_back("grid", r.grid.to_decimal());
        kv.emplace_back("grid_exact", r.grid_exact ? "true" : "false");
    } else if (c.engine == "combined") {
        const auto r = monitor_combined(ds, phi, engine_config(c));
        v = r.verdict;
        kv.emplace_back("verdict", to_string(v));
        kv.emplace_back("engine_used", to_string(r.engine));
        kv.emplace_back("approximate", to_string(r.approximate));
    } else {
        v = monitor(ds, phi, engine_config(c));
        kv.emplace_back("verdict", to_string(v));
        kv.emplace_back("engine", c.engine);
        kv.emplace_back("backend", c.backend);
    }
    emit(*o, fmt, kv);
    return code_of(v);
}

int cmd_gamma(const Common& c, std::ostream& out) {
    DistributedSignal ds = load(c);
    if (!c.relative.empty()) ds = apply_relative(ds, c.relative);
    const auto seg = canonical_segmentation(ds);
    const GammaTable table(ds, seg);
    const Format fmt = formats.at(c.format);
    Output o(c.out, out);
    auto label = [&](const Segment& s) {
        return "[" + to_time(s.lo, ds.tick).to_decimal() + "," + to_time(s.hi, ds.tick).to_decimal() + ")";
    };
    const auto segs = seg.segments();
    if (fmt == Format::text) {
        *o << "segments:";
        for (const auto& s : segs) *o << ' ' << label(s);
        *o << '\n';
        for (std::size_t i = 0; i < ds.signals.size(); ++i) {
            *o << ds.signals[i].name;
            for (std::size_t j = 0; j < segs.size(); ++j) *o << "  " << label(segs[j]) << ' ' << to_string(table.at(i, j));
            *o << '\n';
        }
    } else if (fmt == Format::records) {
        for (std::size_t i = 0; i < ds.signals.size(); ++i)
            for (std::size_t j = 0; j < segs.size(); ++j)
                *o << "gamma " << ds.signals[i].name << ' ' << label(segs[j]) << '=' << to_string(table.at(i, j)) << '\n';
    } else {
        *o << "signal,segment,gamma\n";
        for (std::size_t i = 0; i < ds.signals.size(); ++i)
            for (std::size_t j = 0; j < segs.size(); ++j)
                *o << ds.signals[i].name << ",\"" << label(segs[j]) << "\",\"" << to_string(table.at(i, j)) << "\"\n";
    }
    return 0;
}

int cmd_compare(const Common& c, std::ostream& out) {
    const DistributedSignal ds = load(c);
    const auto phi = parse_formula(c.formula, ds.names(), ds.tick);
    const Verdict approx = monitor(ds, phi, engine_config(c));
    const auto exact = oracle_verdict(ds, phi);
    const bool sound = approx == Verdict::unknown || approx == exact.verdict;
    const bool fp = approx == Verdict::unknown && exact.verdict != Verdict::unknown;
    Output o(c.out, out);
    emit(*o, formats.at(c.format),
         {{"approximate", to_string(approx)},
          {"oracle", to_string(exact.verdict)},
          {"agree", approx == exact.verdict ? "true" : "false"},
          {"false_positive", fp ? "true" : "false"},
          {"grid", exact.grid.to_decimal()},
          {"traces", std::to_string(exact.traces)}});
    return sound ? 0 : 1;
}

std::vector<Rational> rationals(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(Rational::parse(item));
    return out;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"stlmon: STL monitoring of partially synchronous distributed signals"};
    app.require_subcommand(1);

    Common mon;
    auto* monitor_cmd = app.add_subcommand("monitor", "three-valued verdict of a formula on a trace");
    add_common(monitor_cmd, mon, true);
    monitor_cmd->add_option("--engine", mon.engine)->check(CLI::IsMember({"adm", "adm-f", "adm-c", "oracle", "combined"}));
    monitor_cmd->add_option("--backend", mon.backend)->check(CLI::IsMember({"explicit", "compact"}));
    monitor_cmd->add_flag("--assume-monotone", mon.assume_monotone, "let adm-c accept predicates it cannot classify");

    Common gam;
    auto* gamma_cmd = app.add_subcommand("gamma", "segmentation and value-expression table");
    add_common(gamma_cmd, gam, false);

    Common cmp;
    auto* compare_cmd = app.add_subcommand("compare", "approximate verdict against the enumeration oracle");
    add_common(compare_cmd, cmp, true);
    compare_cmd->add_option("--engine", cmp.engine)->check(CLI::IsMember({"adm", "adm-f", "adm-c"}));
    compare_cmd->add_option("--backend", cmp.backend)->check(CLI::IsMember({"explicit", "compact"}));
    compare_cmd->add_flag("--assume-monotone", cmp.assume_monotone, "let adm-c accept predicates it cannot classify");

    GenParams gp;
    std::string gen_duration = "10", gen_epsilon = "1", gen_tick = "1", gen_quantum = "1", gen_alphabet, gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "random distributed trace");
    gen_cmd->add_option("--signals", gp.n_signals);
    gen_cmd->add_option("--duration", gen_duration);
    gen_cmd->add_option("--epsilon", gen_epsilon);
    gen_cmd->add_option("--edges", gp.edges_per_signal, "edges per signal");
    gen_cmd->add_option("--quantum", gen_quantum, "edge-time resolution");
    gen_cmd->add_option("--tick", gen_tick);
    gen_cmd->add_option("--alphabet", gen_alphabet, "comma-separated values (default Boolean)");
    gen_cmd->add_option("--seed", gp.seed);
    gen_cmd->add_option("--out", gen_out);

    BenchConfig bc;
    std::string bench_d = "10,20", bench_eps = "1,2", bench_tick = "0.5", bench_out, bench_timing, bench_backend = "explicit";
    auto* bench_cmd = app.add_subcommand("bench", "false-positive and speedup report over random traces");
    bench_cmd->add_option("--durations", bench_d);
    bench_cmd->add_option("--epsilons", bench_eps);
    bench_cmd->add_option("--samples", bc.samples);
    bench_cmd->add_option("--edges", bc.edges_per_signal);
    bench_cmd->add_option("--seed", bc.seed);
    bench_cmd->add_option("--tick", bench_tick);
    bench_cmd->add_option("--backend", bench_backend)->check(CLI::IsMember({"explicit", "compact"}));
    bench_cmd->add_option("--out", bench_out, "verdict/FP CSV (default stdout)");
    bench_cmd->add_option("--timing", bench_timing, "wall-time CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int rc = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return rc == 0 ? 0 : exit_error;
    }

    try {
        if (*monitor_cmd) return cmd_monitor(mon, out);
        if (*gamma_cmd) return cmd_gamma(gam, out);
        if (*compare_cmd) return cmd_compare(cmp, out);
        if (*gen_cmd) {
            gp.tick = Rational::parse(gen_tick);
            gp.duration = to_ticks(Rational::parse(gen_duration), gp.tick);
            gp.epsilon = to_ticks(Rational::parse(gen_epsilon), gp.tick);
            gp.quantum = to_ticks(Rational::parse(gen_quantum), gp.tick);
            for (const auto& v : rationals(gen_alphabet)) gp.alphabet.push_back(v);
            const auto text = format_trace(generate(gp));
            Output o(gen_out, out);
            *o << text;
            return 0;
        }
        if (*bench_cmd) {
            bc.durations = rationals(bench_d);
            bc.epsilons = rationals(bench_eps);
            bc.tick = Rational::parse(bench_tick);
            bc.backend = bench_backend == "compact" ? SetBackend::compact : SetBackend::explicit_sets;
            const auto report = run_bench(bc);
            Output o(bench_out, out);
            write_bench_csv(report, *o);
            if (!bench_timing.empty()) {
                Output t(bench_timing, out);
                write_timing_csv(report, *t);
            }
            return 0;
        }
    } catch (const OracleInfeasible& e) {
        err << "error: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

} // namespace stlmon
