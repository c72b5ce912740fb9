// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/generator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stlmon {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    // reject the top partial block
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    for (;;) {
        std::uint64_t v = next();
        if (v <= limit) return v % n;
    }
}

DistributedSignal generate(const GenParams& p) {
    Rng rng(p.seed);
    return generate(p, rng);
}

DistributedSignal generate(const GenParams& p, Rng& rng) {
    if (p.duration <= 0 || p.epsilon <= 0 || p.quantum <= 0) throw std::invalid_argument("generate: non-positive parameter");
    if (!p.names.empty() && p.names.size() != p.n_signals) throw std::invalid_argument("generate: names/n_signals mismatch");
    if (!p.alphabet.empty() && p.alphabet.size() < 2 && p.edges_per_signal > 0)
        throw std::invalid_argument("generate: alphabet too small for edges");
    const auto slots = static_cast<std::uint64_t>((p.duration - 1) / p.quantum);  // multiples of q in (0, d)
    if (p.edges_per_signal > slots)
        throw std::invalid_argument("generate: " + std::to_string(p.edges_per_signal) + " edges do not fit in " +
                                    std::to_string(slots) + " grid positions");

    DistributedSignal ds;
    ds.duration = p.duration;
    ds.epsilon = p.epsilon;
    ds.tick = p.tick;
    for (std::size_t i = 0; i < p.n_signals; ++i) {
        Signal x;
        x.name = p.names.empty() ? "x" + std::to_string(i + 1) : p.names[i];
        // Floyd's sampling of distinct positions 1..slots
        std::set<std::uint64_t> picked;
        for (std::uint64_t j = slots - p.edges_per_signal + 1; j <= slots; ++j) {
            std::uint64_t t = 1 + rng.below(j);
            if (!picked.insert(t).second) picked.insert(j);
        }
        auto draw = [&](const Letter* avoid) {
            for (;;) {
                const Letter& v = p.alphabet[rng.below(p.alphabet.size())];
                if (!avoid || v != *avoid) return v;
            }
        };
        if (p.alphabet.empty()) x.initial = Letter(rng.coin() ? 1 : 0);
        else x.initial = draw(nullptr);
        Letter cur = x.initial;
        for (auto t : picked) {
            Letter v = p.alphabet.empty() ? Letter(cur == Letter(0) ? 1 : 0) : draw(&cur);
            x.edges.push_back({static_cast<Tick>(t) * p.quantum, v});
            cur = v;
        }
        ds.signals.push_back(std::move(x));
    }
    return ds;
}

namespace {

TimeInterval random_interval(Rng& rng, const FormulaParams& p) {
    const auto steps = static_cast<std::uint64_t>(p.max_bound / p.bound_step);
    TimeInterval J;
    Tick a = static_cast<Tick>(rng.below(steps + 1)) * p.bound_step;
    Tick b = static_cast<Tick>(rng.below(steps + 1)) * p.bound_step;
    if (a > b) std::swap(a, b);
    J.lo = a;
    J.hi = b;
    J.lo_closed = rng.coin() || a == b;
    J.hi_closed = rng.coin() || a == b;
    if (a == b && b == 0) J.hi = p.bound_step;  // avoid the degenerate [0,0]
    return J;
}

FormulaPtr build(Rng& rng, const std::vector<std::string>& names, const FormulaParams& p, std::size_t depth) {
    if (depth <= 1 || rng.below(4) == 0) {
        auto s = rng.below(names.size());
        return make_bool_atom(names[s], s);
    }
    auto interval = [&]() -> std::optional<TimeInterval> {
        if (!p.timed || rng.coin()) return std::nullopt;
        return random_interval(rng, p);
    };
    switch (rng.below(7)) {
    case 0: return make_not(build(rng, names, p, depth - 1));
    case 1: return make_and(build(rng, names, p, depth - 1), build(rng, names, p, depth - 1));
    case 2: return make_or(build(rng, names, p, depth - 1), build(rng, names, p, depth - 1));
    case 3: return make_implies(build(rng, names, p, depth - 1), build(rng, names, p, depth - 1));
    case 4: {
        auto a = build(rng, names, p, depth - 1);
        auto b = build(rng, names, p, depth - 1);
        return make_until(a, b, interval());
    }
    case 5: return make_eventually(build(rng, names, p, depth - 1), interval());
    default: return make_always(build(rng, names, p, depth - 1), interval());
    }
}

} // namespace

FormulaPtr random_formula(Rng& rng, const std::vector<std::string>& names, const FormulaParams& p) {
    if (names.empty()) throw std::invalid_argument("random_formula: no signals");
    return build(rng, names, p, p.max_depth + 1);
}

} // namespace stlmon
