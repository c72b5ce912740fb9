// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "stlmon/generator.hpp"
#include "stlmon/oracle.hpp"
#include "stlmon/product.hpp"

namespace stlmon::testing {

// Two Boolean signals on [0,8) with eps = 2: x1 rises at 2 and falls at 5,
// x2 rises at 3 and falls at 6. Tick 1/2 so that half-unit retimings exist.
inline DistributedSignal running_example() {
    DistributedSignal ds;
    ds.tick = Rational(1, 2);
    ds.duration = 16;
    ds.epsilon = 4;
    ds.signals = {
        {"x1", Letter(0), {{4, Letter(1)}, {10, Letter(0)}}},
        {"x2", Letter(0), {{6, Letter(1)}, {12, Letter(0)}}},
    };
    return ds;
}

// Segment [a, b) given in time units of running_example().
inline Segment units(Tick a, Tick b) { return {2 * a, 2 * b}; }

inline FormulaPtr parse(const DistributedSignal& ds, const std::string& text) {
    return parse_formula(text, ds.names(), ds.tick);
}

inline Signal boolean_signal(std::string name, int initial, std::initializer_list<Tick> times) {
    Signal x{std::move(name), Letter(initial), {}};
    int v = initial;
    for (Tick t : times) {
        v = 1 - v;
        x.edges.push_back({t, Letter(v)});
    }
    return x;
}

// Random small Boolean instance: edges on whole time units (tick 1/2), so the
// default oracle grid is a single tick.
inline DistributedSignal small_instance(Rng& rng, std::size_t max_signals = 3, std::size_t max_edges = 3) {
    GenParams gp;
    gp.n_signals = 1 + rng.below(max_signals);
    gp.tick = Rational(1, 2);
    gp.quantum = 2;
    gp.duration = 2 * static_cast<Tick>(8 + rng.below(5));
    gp.epsilon = 2 * static_cast<Tick>(1 + rng.below(2));
    gp.edges_per_signal = rng.below(max_edges + 1);
    gp.seed = rng.next();
    return generate(gp);
}

inline FormulaParams small_formulas(bool timed) {
    FormulaParams fp;
    fp.timed = timed;
    fp.max_depth = 3;
    fp.max_bound = 6;  // three time units
    fp.bound_step = 2;
    return fp;
}

// Random canonical Boolean words.
inline ValueExpr random_word(Rng& rng, std::size_t max_len) {
    ValueExpr w;
    const std::size_t len = 1 + rng.below(max_len);
    int b = rng.coin() ? 1 : 0;
    for (std::size_t i = 0; i < len; ++i, b = 1 - b) w.push_back(Letter(b));
    return w;
}

inline ExprSet random_set(Rng& rng, std::size_t max_members, std::size_t max_len) {
    ExprSet s;
    const std::size_t n = 1 + rng.below(max_members);
    while (s.size() < n) s.insert(random_word(rng, max_len));
    return s;
}

} // namespace stlmon::testing
