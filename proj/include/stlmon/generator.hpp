// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stlmon/formula.hpp"
#include "stlmon/trace.hpp"

namespace stlmon {

// mt19937_64 with portable bounded draws (std distributions differ across libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform on [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

struct GenParams {
    std::size_t n_signals = 2;
    Tick duration = 10;
    Tick epsilon = 1;
    std::size_t edges_per_signal = 2;
    Tick quantum = 1;              // edge times are multiples of this
    std::vector<Letter> alphabet;  // empty: Boolean, alternating from a random initial bit
    std::uint64_t seed = 1;
    Rational tick{1, 1};
    std::vector<std::string> names;  // default x1, x2, ...
};

// Throws std::invalid_argument when the grid (0, d) has too few positions.
DistributedSignal generate(const GenParams& p);
DistributedSignal generate(const GenParams& p, Rng& rng);

struct FormulaParams {
    std::size_t max_depth = 3;
    bool timed = true;
    Tick max_bound = 3;  // interval endpoints drawn from [0, max_bound] (in ticks)
    Tick bound_step = 1;
};

// Random formula over Boolean signals; used by property tests and the acceptance suite.
FormulaPtr random_formula(Rng& rng, const std::vector<std::string>& names, const FormulaParams& p);

} // namespace stlmon
