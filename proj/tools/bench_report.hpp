// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stlmon/engine.hpp"

namespace stlmon {

struct BenchFormula {
    std::string id;
    std::string text;  // over signals p and q
};

// The six experiment specifications.
std::vector<BenchFormula> default_bench_formulas();

struct BenchConfig {
    std::vector<Rational> durations{Rational(10), Rational(20)};
    std::vector<Rational> epsilons{Rational(1), Rational(2)};
    std::vector<BenchFormula> formulas = default_bench_formulas();
    std::size_t samples = 10;
    std::size_t edges_per_signal = 3;
    std::uint64_t seed = 1;
    Rational tick{1, 2};      // edges fall on whole time units, so the oracle grid is one tick
    Rational quantum{1, 1};   // edge-time resolution, in time units
    SetBackend backend = SetBackend::explicit_sets;
    Variant variant = Variant::adm;
};

struct BenchCell {
    std::string formula_id, formula;
    Rational d, epsilon;
    std::size_t samples = 0;
    std::size_t approx_true = 0, approx_false = 0, approx_unknown = 0;
    std::size_t oracle_true = 0, oracle_false = 0, oracle_unknown = 0, oracle_infeasible = 0;
    std::size_t false_positives = 0;  // approximate UNKNOWN, oracle conclusive
    double approx_seconds = 0, oracle_seconds = 0, combined_seconds = 0;  // sums over feasible samples
    std::size_t timed_samples = 0;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchCell> cells;  // formula-major, then d, then epsilon
};

BenchReport run_bench(const BenchConfig& cfg);

// Verdict counts and FP rates only: byte-identical for a fixed seed.
void write_bench_csv(const BenchReport& r, std::ostream& out);
// Wall-clock columns; varies between runs.
void write_timing_csv(const BenchReport& r, std::ostream& out);

} // namespace stlmon
