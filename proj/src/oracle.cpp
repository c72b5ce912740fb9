// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <omp.h>

namespace stlmon {

// ---- synchronous semantics ---------------------------------------------------------
//
// Time is cut into cells of width unit/2: even cell 2i is the point i*unit, odd
// cell 2i+1 the open interval between two points. Signals are constant on cells.

SyncEvaluator::SyncEvaluator(const Formula& phi, Tick d, Tick unit) : phi_(phi), d_(d), unit_(unit) {
    if (unit <= 0 || d % unit != 0) throw std::invalid_argument("sync evaluation: unit must divide the duration");
    points_ = static_cast<std::size_t>(d / unit);
    if (points_ > (std::size_t{1} << 22)) throw OracleInfeasible("sync evaluation: time grid too fine");
}

bool SyncEvaluator::operator()(std::span<const Signal> w) { return sat(phi_, w).front() != 0; }

std::vector<char> SyncEvaluator::sat(const Formula& f, std::span<const Signal> w) {
    const std::size_t n = 2 * points_;
    std::vector<char> out(n, 0);
    switch (f.op) {
    case Op::constant: std::fill(out.begin(), out.end(), f.truth ? 1 : 0); break;
    case Op::atom: {
        const auto sig = f.pred->signals();
        std::vector<Letter> values(w.size());
        std::vector<std::size_t> next(w.size(), 0);
        for (auto s : sig) values[s] = w[s].initial;
        bool cur = f.pred->holds(values);
        for (std::size_t i = 0; i < points_; ++i) {
            const Tick t = static_cast<Tick>(i) * unit_;
            bool changed = false;
            for (auto s : sig) {
                const auto& edges = w[s].edges;
                while (next[s] < edges.size() && edges[next[s]].time <= t) {
                    values[s] = edges[next[s]++].value;
                    changed = true;
                }
            }
            if (changed) cur = f.pred->holds(values);
            out[2 * i] = out[2 * i + 1] = cur ? 1 : 0;
        }
        break;
    }
    case Op::negation: {
        auto a = sat(*f.lhs, w);
        for (std::size_t k = 0; k < n; ++k) out[k] = !a[k];
        break;
    }
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: {
        auto a = sat(*f.lhs, w);
        auto b = sat(*f.rhs, w);
        for (std::size_t k = 0; k < n; ++k) {
            if (f.op == Op::conjunction) out[k] = a[k] && b[k];
            else if (f.op == Op::disjunction) out[k] = a[k] || b[k];
            else out[k] = !a[k] || b[k];
        }
        break;
    }
    case Op::until:
    case Op::eventually:
    case Op::always: {
        const TimeInterval J = f.interval.value_or(TimeInterval{});
        if (f.op == Op::until) {
            until(out, sat(*f.lhs, w), sat(*f.rhs, w), J);
        } else if (f.op == Op::eventually) {
            until(out, std::vector<char>(n, 1), sat(*f.lhs, w), J);
        } else {
            auto a = sat(*f.lhs, w);
            for (auto& c : a) c = !c;
            until(out, std::vector<char>(n, 1), a, J);
            for (auto& c : out) c = !c;
        }
        break;
    }
    }
    return out;
}

void SyncEvaluator::until(std::vector<char>& out, const std::vector<char>& a, const std::vector<char>& b,
                          const TimeInterval& J) const {
    const auto n = static_cast<std::int64_t>(out.size());
    if (J.lo % unit_ != 0 || (J.hi && *J.hi % unit_ != 0)) throw std::logic_error("interval bound off the unit grid");
    const std::int64_t lo = J.lo / unit_;
    const std::int64_t hi = J.hi ? *J.hi / unit_ : -1;
    // prefix sums of b
    std::vector<std::int64_t> pre(out.size() + 1, 0);
    for (std::int64_t k = 0; k < n; ++k) pre[k + 1] = pre[k] + (b[k] ? 1 : 0);
    auto any_b = [&](std::int64_t from, std::int64_t to) {
        from = std::max<std::int64_t>(from, 0);
        to = std::min<std::int64_t>(to, n - 1);
        return from <= to && pre[to + 1] - pre[from] > 0;
    };
    // first index > k where a is false (n if none)
    std::vector<std::int64_t> fail(out.size() + 1, n);
    for (std::int64_t k = n - 1; k >= 0; --k) fail[k] = (k + 1 < n && !a[k + 1]) ? k + 1 : fail[k + 1];

    for (std::int64_t k = 0; k < n; ++k) {
        const bool point = k % 2 == 0;
        const std::int64_t i = k / 2;
        std::int64_t start, end;
        if (point) {
            start = 2 * (i + lo) + (J.lo_closed ? 0 : 1);
            end = J.hi ? 2 * (i + hi) - (J.hi_closed ? 0 : 1) : n - 1;
        } else {
            start = 2 * (i + lo) + 1;
            end = J.hi ? 2 * (i + hi) + 1 : n - 1;
        }
        bool ok = false;
        // witness in the cell of t itself
        if (lo == 0) {
            if (point) ok = J.lo_closed && b[k];
            else ok = b[k] && (J.lo_closed || a[k]);
        }
        if (!ok && (point || a[k])) {
            const std::int64_t f = fail[k];
            const std::int64_t limit = (f < n && f % 2 == 0) ? f : f - 1;
            ok = any_b(std::max(start, k + 1), std::min(end, limit));
        }
        out[k] = ok ? 1 : 0;
    }
}

namespace {

void interval_bounds(const Formula& f, std::vector<Tick>& out) {
    if (f.interval) {
        out.push_back(f.interval->lo);
        if (f.interval->hi) out.push_back(*f.interval->hi);
    }
    if (f.lhs) interval_bounds(*f.lhs, out);
    if (f.rhs) interval_bounds(*f.rhs, out);
}

Tick sync_unit(const Formula& phi, Tick d, Tick base, std::span<const Signal> fixed) {
    Tick g = std::gcd(d, base);
    std::vector<Tick> bounds;
    interval_bounds(phi, bounds);
    for (Tick b : bounds) g = std::gcd(g, b);
    for (const auto& x : fixed)
        for (const auto& e : x.edges) g = std::gcd(g, e.time);
    return g;
}

} // namespace

bool eval_sync(std::span<const Signal> w, Tick d, const Formula& phi) {
    Tick base = d;
    for (const auto& x : w)
        for (const auto& e : x.edges) base = std::gcd(base, e.time);
    SyncEvaluator ev(phi, d, sync_unit(phi, d, base, {}));
    return ev(w);
}

// ---- retiming enumeration -----------------------------------------------------------

Tick default_grid(const DistributedSignal& ds) {
    auto seg = canonical_segmentation(ds);
    Tick g = 0;
    for (Tick p : seg.points()) g = std::gcd(g, p);
    return g % 2 == 0 ? g / 2 : 0;
}

DistributedSignal scale_trace(const DistributedSignal& ds, Tick k) {
    if (k <= 0) throw std::invalid_argument("scale_trace: factor must be positive");
    DistributedSignal out = ds;
    out.duration *= k;
    out.epsilon *= k;
    out.tick = ds.tick / Rational(k);
    for (auto& x : out.signals)
        for (auto& e : x.edges) e.time *= k;
    return out;
}

FormulaPtr scale_formula(const FormulaPtr& f, Tick k) {
    if (!f) return f;
    auto g = std::make_shared<Formula>(*f);
    if (g->interval) {
        g->interval->lo *= k;
        if (g->interval->hi) *g->interval->hi *= k;
    }
    g->lhs = scale_formula(f->lhs, k);
    g->rhs = scale_formula(f->rhs, k);
    return g;
}

namespace {

struct EdgeSlot {
    std::size_t signal = 0, index = 0;
    Tick original = 0;
    std::vector<Tick> candidates;
    std::vector<std::size_t> before;  // slots (earlier in DFS order) that must come strictly earlier
};

struct Plan {
    std::vector<EdgeSlot> slots;
    SyncTrace base;
};

Plan make_plan(const DistributedSignal& ds, Tick grid, const OracleOptions& opts) {
    if (grid <= 0) throw std::invalid_argument("oracle: grid must be positive");
    if (ds.edge_count() > opts.max_edges)
        throw OracleInfeasible("oracle: " + std::to_string(ds.edge_count()) + " edges exceed the cap of " +
                               std::to_string(opts.max_edges));
    Plan plan;
    plan.base = ds.signals;
    for (std::size_t i = 0; i < ds.signals.size(); ++i) {
        auto regions = uncertainty_regions(ds.signals[i], ds.skew_of(i), ds.duration);
        for (std::size_t k = 0; k < regions.size(); ++k) {
            EdgeSlot s;
            s.signal = i;
            s.index = k;
            s.original = ds.signals[i].edges[k].time;
            if (ds.skew_of(i) == 0) {
                s.candidates = {s.original};
            } else {
                for (Tick t = (regions[k].lo / grid + 1) * grid; t < regions[k].hi; t += grid) s.candidates.push_back(t);
            }
            plan.slots.push_back(std::move(s));
        }
    }
    std::stable_sort(plan.slots.begin(), plan.slots.end(), [](const EdgeSlot& a, const EdgeSlot& b) {
        return a.original != b.original ? a.original < b.original : a.signal < b.signal;
    });
    for (std::size_t e = 0; e < plan.slots.size(); ++e)
        for (std::size_t p = 0; p < e; ++p) {
            const auto& a = plan.slots[p];
            const auto& b = plan.slots[e];
            if (a.signal == b.signal || a.original + ds.epsilon <= b.original) plan.slots[e].before.push_back(p);
        }
    return plan;
}

// Depth-first enumeration from slot `depth` with `times` assigned for earlier slots.
class Walker {
public:
    Walker(const Plan& plan, const std::function<bool(std::span<const Signal>)>& visit)
        : plan_(plan), visit_(visit), trace_(plan.base), times_(plan.slots.size()) {}

    // Returns false when the visitor asked to stop.
    bool run(std::size_t depth) {
        if (depth == plan_.slots.size()) {
            ++count;
            for (std::size_t e = 0; e < times_.size(); ++e)
                trace_[plan_.slots[e].signal].edges[plan_.slots[e].index].time = times_[e];
            return visit_(trace_);
        }
        const auto& slot = plan_.slots[depth];
        Tick lower = -1;
        for (auto p : slot.before) lower = std::max(lower, times_[p]);
        for (Tick t : slot.candidates) {
            if (t <= lower) continue;
            times_[depth] = t;
            if (!run(depth + 1)) return false;
        }
        return true;
    }

    std::vector<Tick>& times() { return times_; }
    std::size_t count = 0;

private:
    const Plan& plan_;
    const std::function<bool(std::span<const Signal>)>& visit_;
    SyncTrace trace_;
    std::vector<Tick> times_;
};

[[noreturn]] void too_many(const OracleOptions& opts) {
    throw OracleInfeasible("oracle: more than " + std::to_string(opts.max_traces) + " retimings on this grid");
}

// Counting pass without evaluation, so oversized instances fail fast.
void check_size(const Plan& plan, const OracleOptions& opts) {
    long double bound = 1;
    for (const auto& s : plan.slots) bound *= static_cast<long double>(std::max<std::size_t>(1, s.candidates.size()));
    if (bound <= static_cast<long double>(opts.max_traces)) return;
    std::size_t n = 0;
    std::function<bool(std::span<const Signal>)> count = [&](std::span<const Signal>) { return ++n <= opts.max_traces; };
    Walker w(plan, count);
    w.run(0);
    if (n > opts.max_traces) too_many(opts);
}

Tick unit_for(const DistributedSignal& ds, const Formula& phi, Tick grid) {
    std::vector<Signal> fixed;
    if (ds.reference) fixed.push_back(ds.signals[*ds.reference]);
    return sync_unit(phi, ds.duration, grid, fixed);
}

OracleResult finish(bool seen_true, bool seen_false, std::size_t traces, Rational grid, const Formula& phi) {
    if (traces == 0) throw OracleInfeasible("oracle: no retiming lies on the grid");
    OracleResult r;
    r.verdict = seen_true && seen_false ? Verdict::unknown : (seen_true ? Verdict::true_ : Verdict::false_);
    r.traces = traces;
    r.grid = grid;
    r.grid_exact = contains_timed(phi);
    return r;
}

// Trace and formula at a resolution where the default grid is a whole tick.
struct Instance {
    DistributedSignal ds;
    FormulaPtr phi;
    Tick grid = 0;

    Instance(const DistributedSignal& in, const FormulaPtr& f, const OracleOptions& opts) : ds(in), phi(f) {
        if (opts.grid > 0) {
            grid = opts.grid;
            return;
        }
        grid = default_grid(ds);
        if (grid == 0) {
            ds = scale_trace(in, 2);
            phi = scale_formula(f, 2);
            grid = default_grid(ds);
        }
    }
    Rational grid_time() const { return to_time(grid, ds.tick); }
};

} // namespace

std::size_t enumerate_traces(const DistributedSignal& ds, Tick grid,
                             const std::function<bool(std::span<const Signal>)>& visit, const OracleOptions& opts) {
    Plan plan = make_plan(ds, grid, opts);
    check_size(plan, opts);
    Walker w(plan, visit);
    w.run(0);
    return w.count;
}

OracleResult oracle_verdict_serial(const DistributedSignal& ds_in, const FormulaPtr& phi_in, const OracleOptions& opts) {
    require_valid(ds_in);
    const Instance inst(ds_in, phi_in, opts);
    const auto& ds = inst.ds;
    const auto& phi = inst.phi;
    const Tick grid = inst.grid;
    Plan plan = make_plan(ds, grid, opts);
    check_size(plan, opts);
    SyncEvaluator ev(*phi, ds.duration, unit_for(ds, *phi, grid));
    bool seen_true = false, seen_false = false, overflow = false;
    std::size_t visited = 0;
    std::function<bool(std::span<const Signal>)> visit = [&](std::span<const Signal> w) {
        if (++visited > opts.max_traces) {
            overflow = true;
            return false;
        }
        (ev(w) ? seen_true : seen_false) = true;
        return !(seen_true && seen_false);
    };
    Walker walker(plan, visit);
    walker.run(0);
    if (overflow && !(seen_true && seen_false)) too_many(opts);
    return finish(seen_true, seen_false, walker.count, inst.grid_time(), *phi);
}

OracleResult oracle_verdict(const DistributedSignal& ds_in, const FormulaPtr& phi_in, const OracleOptions& opts) {
    require_valid(ds_in);
    const Instance inst(ds_in, phi_in, opts);
    const auto& ds = inst.ds;
    const auto& phi = inst.phi;
    const Tick grid = inst.grid;
    Plan plan = make_plan(ds, grid, opts);
    check_size(plan, opts);
    const Tick unit = unit_for(ds, *phi, grid);

    // Split the search tree at a shallow depth into independent prefixes.
    const std::size_t want = 16 * static_cast<std::size_t>(omp_get_max_threads());
    std::vector<std::vector<Tick>> prefixes{{}};
    std::size_t depth = 0;
    while (depth < plan.slots.size() && prefixes.size() < want) {
        std::vector<std::vector<Tick>> next;
        const auto& slot = plan.slots[depth];
        for (const auto& pre : prefixes) {
            Tick lower = -1;
            for (auto p : slot.before) lower = std::max(lower, pre[p]);
            for (Tick t : slot.candidates)
                if (t > lower) {
                    next.push_back(pre);
                    next.back().push_back(t);
                }
        }
        prefixes = std::move(next);
        ++depth;
    }

    std::atomic<bool> seen_true{false}, seen_false{false}, overflow{false};
    std::atomic<std::size_t> traces{0}, visited{0};
    const auto jobs = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel
    {
        SyncEvaluator ev(*phi, ds.duration, unit);
        std::function<bool(std::span<const Signal>)> visit = [&](std::span<const Signal> w) {
            if (visited.fetch_add(1, std::memory_order_relaxed) >= opts.max_traces) {
                overflow.store(true, std::memory_order_relaxed);
                return false;
            }
            if (ev(w)) seen_true.store(true, std::memory_order_relaxed);
            else seen_false.store(true, std::memory_order_relaxed);
            return !(seen_true.load(std::memory_order_relaxed) && seen_false.load(std::memory_order_relaxed));
        };
        Walker walker(plan, visit);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t job = 0; job < jobs; ++job) {
            if (overflow.load(std::memory_order_relaxed) ||
                (seen_true.load(std::memory_order_relaxed) && seen_false.load(std::memory_order_relaxed)))
                continue;
            const auto& pre = prefixes[static_cast<std::size_t>(job)];
            std::copy(pre.begin(), pre.end(), walker.times().begin());
            walker.run(depth);
        }
        traces.fetch_add(walker.count, std::memory_order_relaxed);
    }
    if (overflow.load() && !(seen_true.load() && seen_false.load())) too_many(opts);
    return finish(seen_true.load(), seen_false.load(), traces.load(), inst.grid_time(), *phi);
}

std::string to_string(EngineUsed e) { return e == EngineUsed::exact ? "exact" : "approximate"; }

CombinedResult monitor_combined(const DistributedSignal& ds, const FormulaPtr& phi, const EngineConfig& cfg,
                                const OracleOptions& opts) {
    CombinedResult r;
    r.approximate = monitor(ds, phi, cfg);
    r.verdict = r.approximate;
    if (r.approximate != Verdict::unknown) return r;
    DistributedSignal exact = ds;
    exact.reference.reset();  // the exact semantics has no reference agent
    r.oracle = oracle_verdict(exact, phi, opts);
    r.verdict = r.oracle->verdict;
    r.engine = EngineUsed::exact;
    return r;
}

} // namespace stlmon
