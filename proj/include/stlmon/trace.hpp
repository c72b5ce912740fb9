// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stlmon/words.hpp"

namespace stlmon {

using Tick = std::int64_t;

struct Edge {
    Tick time = 0;
    Letter value;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Signal {
    std::string name;
    Letter initial;
    std::vector<Edge> edges;

    Letter value_at(Tick t) const;
    bool is_boolean() const;
    friend bool operator==(const Signal&, const Signal&) = default;
};

struct DistributedSignal {
    std::vector<Signal> signals;
    Tick duration = 0;
    Tick epsilon = 0;
    Rational tick{1, 1'000'000'000};
    // Reference agent of relative mode: its edges carry no uncertainty.
    std::optional<std::size_t> reference;

    std::size_t index_of(std::string_view name) const;
    std::vector<std::string> names() const;
    Tick skew_of(std::size_t signal) const { return reference && *reference == signal ? 0 : epsilon; }
    std::size_t edge_count() const;
};

struct Violation {
    std::string signal;   // empty for trace-level problems
    std::size_t position; // edge index, or 0
    std::string rule;
};

std::vector<Violation> validate(const DistributedSignal& ds);
// Throws std::invalid_argument listing the violations.
void require_valid(const DistributedSignal& ds);

struct Segment {
    Tick lo = 0;
    Tick hi = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct UncertaintyRegion {
    Tick lo = 0;
    Tick hi = 0;
    ValueExpr expr;
};

std::vector<UncertaintyRegion> uncertainty_regions(const Signal& x, Tick eps, Tick d);

class Segmentation {
public:
    Segmentation() = default;
    explicit Segmentation(std::vector<Tick> points);

    std::size_t size() const { return points_.size() - 1; }
    Segment operator[](std::size_t i) const { return {points_[i], points_[i + 1]}; }
    std::vector<Segment> segments() const;
    const std::vector<Tick>& points() const { return points_; }
    Tick duration() const { return points_.back(); }

    // Index of the segment containing t (t in [0, d)).
    std::size_t find(Tick t) const;
    std::optional<std::size_t> index_of(const Segment& s) const;
    bool is_point(Tick t) const;

private:
    std::vector<Tick> points_{0, 1};
};

Segmentation canonical_segmentation(const DistributedSignal& ds);

// gamma(x, I) for the signal with index `signal` in ds.
ExprSet gamma(const DistributedSignal& ds, std::size_t signal, const Segment& I);
ExprSet gamma(const Signal& x, const Segment& I, const DistributedSignal& ds);

// All gamma cells, built once per monitoring context.
class GammaTable {
public:
    GammaTable() = default;
    GammaTable(const DistributedSignal& ds, const Segmentation& seg, bool parallel = true);

    const ExprSet& at(std::size_t signal, std::size_t segment) const { return cells_[signal * width_ + segment]; }
    std::size_t signals() const { return width_ == 0 ? 0 : cells_.size() / width_; }
    std::size_t segments() const { return width_; }

private:
    std::size_t width_ = 0;
    std::vector<ExprSet> cells_;
};

// Tr+ membership of x_prime with respect to the signal of ds named like x.
bool is_consistent(const Signal& x_prime, const Signal& x, const DistributedSignal& ds);
bool is_consistent(const Signal& x_prime, std::size_t signal, const Segmentation& seg, const GammaTable& table);

Tick to_ticks(const Rational& time, const Rational& tick);
Rational to_time(Tick t, const Rational& tick);

} // namespace stlmon
