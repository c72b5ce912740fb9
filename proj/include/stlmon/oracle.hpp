// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "stlmon/formula.hpp"
#include "stlmon/verdict.hpp"

namespace stlmon {

using SyncTrace = std::vector<Signal>;

class OracleInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    Tick grid = 0;  // 0: default_grid()
    std::size_t max_edges = 12;
    std::size_t max_traces = 1'000'000;
};

struct OracleResult {
    Verdict verdict = Verdict::unknown;
    std::size_t traces = 0;
    Rational grid{0, 1};  // spacing of retimed edges, in time units
    bool grid_exact = false;  // formula has timed operators: verdict is exact only on the grid
};

// Satisfaction of phi at time 0 on a synchronous trace over [0, d).
bool eval_sync(std::span<const Signal> w, Tick d, const Formula& phi);

// Reusable evaluator: all edge times, d and interval bounds must be multiples of `unit`.
class SyncEvaluator {
public:
    SyncEvaluator(const Formula& phi, Tick d, Tick unit);
    bool operator()(std::span<const Signal> w);

private:
    std::vector<char> sat(const Formula& f, std::span<const Signal> w);
    void until(std::vector<char>& out, const std::vector<char>& a, const std::vector<char>& b, const TimeInterval& J) const;

    const Formula& phi_;
    Tick d_, unit_;
    std::size_t points_;  // d / unit
};

// Half the gcd of all canonical segmentation points, in ticks; 0 when that gcd
// is odd (the oracle then works on a trace refined by scale_trace(ds, 2)).
Tick default_grid(const DistributedSignal& ds);

// Same trace and formula with every time multiplied by k and the tick divided by k.
DistributedSignal scale_trace(const DistributedSignal& ds, Tick k);
FormulaPtr scale_formula(const FormulaPtr& f, Tick k);

// Visits every grid retiming; `visit` returns false to stop. Returns the number visited.
// Throws OracleInfeasible above opts.max_traces retimings or opts.max_edges edges.
std::size_t enumerate_traces(const DistributedSignal& ds, Tick grid,
                             const std::function<bool(std::span<const Signal>)>& visit,
                             const OracleOptions& opts = {});

OracleResult oracle_verdict(const DistributedSignal& ds, const FormulaPtr& phi, const OracleOptions& opts = {});
OracleResult oracle_verdict_serial(const DistributedSignal& ds, const FormulaPtr& phi, const OracleOptions& opts = {});

enum class EngineUsed { approximate, exact };
std::string to_string(EngineUsed e);

struct CombinedResult {
    Verdict verdict = Verdict::unknown;
    EngineUsed engine = EngineUsed::approximate;
    Verdict approximate = Verdict::unknown;
    std::optional<OracleResult> oracle;
};

// Approximate monitor; falls back to the oracle on UNKNOWN.
CombinedResult monitor_combined(const DistributedSignal& ds, const FormulaPtr& phi, const EngineConfig& cfg = {},
                                const OracleOptions& opts = {});

} // namespace stlmon
