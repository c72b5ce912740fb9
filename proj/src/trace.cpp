// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/trace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stlmon {

Letter Signal::value_at(Tick t) const {
    Letter v = initial;
    for (const auto& e : edges) {
        if (e.time > t) break;
        v = e.value;
    }
    return v;
}

bool Signal::is_boolean() const {
    auto bit = [](const Letter& l) { return l == Letter(0) || l == Letter(1); };
    if (!bit(initial)) return false;
    return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return bit(e.value); });
}

std::size_t DistributedSignal::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < signals.size(); ++i)
        if (signals[i].name == name) return i;
    throw std::invalid_argument("unknown signal '" + std::string(name) + "'");
}

std::vector<std::string> DistributedSignal::names() const {
    std::vector<std::string> out;
    for (const auto& s : signals) out.push_back(s.name);
    return out;
}

std::size_t DistributedSignal::edge_count() const {
    std::size_t n = 0;
    for (const auto& s : signals) n += s.edges.size();
    return n;
}

std::vector<Violation> validate(const DistributedSignal& ds) {
    std::vector<Violation> out;
    if (ds.duration <= 0) out.push_back({"", 0, "duration must be positive"});
    if (ds.epsilon <= 0) out.push_back({"", 0, "epsilon must be positive"});
    if (ds.reference && *ds.reference >= ds.signals.size()) out.push_back({"", 0, "reference agent out of range"});
    std::set<std::string> seen;
    for (const auto& x : ds.signals) {
        if (x.name.empty()) out.push_back({x.name, 0, "empty signal name"});
        if (!seen.insert(x.name).second) out.push_back({x.name, 0, "duplicate signal name"});
        Letter prev = x.initial;
        for (std::size_t i = 0; i < x.edges.size(); ++i) {
            const Edge& e = x.edges[i];
            if (e.time == 0) out.push_back({x.name, i, "edge at time 0"});
            else if (e.time < 0) out.push_back({x.name, i, "negative timestamp"});
            if (i > 0 && e.time <= x.edges[i - 1].time) out.push_back({x.name, i, "non-increasing timestamps"});
            if (e.time >= ds.duration) out.push_back({x.name, i, "edge outside domain"});
            if (e.value == prev) out.push_back({x.name, i, "repeated value"});
            prev = e.value;
        }
    }
    return out;
}

void require_valid(const DistributedSignal& ds) {
    auto v = validate(ds);
    if (v.empty()) return;
    std::string msg = "invalid distributed signal:";
    for (const auto& x : v) {
        msg += " [";
        if (!x.signal.empty()) msg += x.signal + "#" + std::to_string(x.position) + ": ";
        msg += x.rule + "]";
    }
    throw std::invalid_argument(msg);
}

std::vector<UncertaintyRegion> uncertainty_regions(const Signal& x, Tick eps, Tick d) {
    std::vector<UncertaintyRegion> out;
    out.reserve(x.edges.size());
    Letter prev = x.initial;
    for (const auto& e : x.edges) {
        out.push_back({std::max<Tick>(0, e.time - eps), std::min(d, e.time + eps), ValueExpr{prev, e.value}});
        prev = e.value;
    }
    return out;
}

Segmentation::Segmentation(std::vector<Tick> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    if (points_.size() < 2) throw std::invalid_argument("segmentation needs at least two points");
}

std::vector<Segment> Segmentation::segments() const {
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) out.push_back({points_[i], points_[i + 1]});
    return out;
}

std::size_t Segmentation::find(Tick t) const {
    if (t < points_.front() || t >= points_.back()) throw std::out_of_range("time outside the temporal domain");
    auto it = std::upper_bound(points_.begin(), points_.end(), t);
    return static_cast<std::size_t>(it - points_.begin()) - 1;
}

std::optional<std::size_t> Segmentation::index_of(const Segment& s) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), s.lo);
    if (it == points_.end() || *it != s.lo || it + 1 == points_.end() || *(it + 1) != s.hi) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

bool Segmentation::is_point(Tick t) const { return std::binary_search(points_.begin(), points_.end(), t); }

Segmentation canonical_segmentation(const DistributedSignal& ds) {
    std::vector<Tick> f{0, ds.duration};
    for (std::size_t i = 0; i < ds.signals.size(); ++i)
        for (const auto& r : uncertainty_regions(ds.signals[i], ds.skew_of(i), ds.duration)) {
            f.push_back(r.lo);
            f.push_back(r.hi);
        }
    return Segmentation(std::move(f));
}

namespace {

ExprSet gamma_cell(const Signal& x, const std::vector<UncertaintyRegion>& regions, const Segment& I) {
    ExprSet acc{ValueExpr{}};
    bool touched = false;
    for (const auto& r : regions) {
        if (r.lo >= r.hi) continue;              // zero-width (reference agent)
        if (r.hi <= I.lo || r.lo >= I.hi) continue;  // open region misses I
        touched = true;
        ExprSet v;
        const ExprSet one{r.expr};
        if (r.lo == I.lo && r.hi == I.hi) v = one;
        else if (r.lo == I.lo && I.hi < r.hi) v = affix_closure(one, Affix::prefix);
        else if (r.lo < I.lo && I.hi == r.hi) v = affix_closure(one, Affix::suffix);
        else if (r.lo < I.lo && I.hi < r.hi) v = affix_closure(one, Affix::infix);
        else throw std::logic_error("gamma: region endpoint inside a segment");
        acc = concat_destutter(acc, v);
    }
    if (!touched) return ExprSet{ValueExpr{x.value_at(I.lo)}};
    return without_empty(std::move(acc));
}

} // namespace

ExprSet gamma(const DistributedSignal& ds, std::size_t signal, const Segment& I) {
    auto seg = canonical_segmentation(ds);
    if (!seg.index_of(I)) throw std::invalid_argument("gamma: interval is not a segment of the canonical segmentation");
    const Signal& x = ds.signals.at(signal);
    return gamma_cell(x, uncertainty_regions(x, ds.skew_of(signal), ds.duration), I);
}

ExprSet gamma(const Signal& x, const Segment& I, const DistributedSignal& ds) {
    return gamma(ds, ds.index_of(x.name), I);
}

GammaTable::GammaTable(const DistributedSignal& ds, const Segmentation& seg, bool parallel) : width_(seg.size()) {
    const std::size_t n = ds.signals.size();
    cells_.resize(n * width_);
    std::vector<std::vector<UncertaintyRegion>> regions(n);
    for (std::size_t i = 0; i < n; ++i) regions[i] = uncertainty_regions(ds.signals[i], ds.skew_of(i), ds.duration);
    const auto total = static_cast<std::int64_t>(cells_.size());
#pragma omp parallel for schedule(static) if (parallel && total > 64)
    for (std::int64_t k = 0; k < total; ++k) {
        auto i = static_cast<std::size_t>(k) / width_;
        auto j = static_cast<std::size_t>(k) % width_;
        cells_[static_cast<std::size_t>(k)] = gamma_cell(ds.signals[i], regions[i], seg[j]);
    }
}

bool is_consistent(const Signal& x_prime, std::size_t signal, const Segmentation& seg, const GammaTable& table) {
    std::size_t e = 0;
    const auto& edges = x_prime.edges;
    for (std::size_t j = 0; j < seg.size(); ++j) {
        Segment I = seg[j];
        while (e < edges.size() && edges[e].time <= I.lo) ++e;
        ValueExpr w{x_prime.value_at(I.lo)};
        for (; e < edges.size() && edges[e].time < I.hi; ++e)
            if (edges[e].value != w.back()) w.push_back(edges[e].value);
        if (!table.at(signal, j).count(w)) return false;
    }
    return true;
}

bool is_consistent(const Signal& x_prime, const Signal& x, const DistributedSignal& ds) {
    auto seg = canonical_segmentation(ds);
    GammaTable table(ds, seg, false);
    return is_consistent(x_prime, ds.index_of(x.name), seg, table);
}

Tick to_ticks(const Rational& time, const Rational& tick) {
    Rational q = time / tick;
    if (!q.is_integer()) throw std::invalid_argument("time " + time.to_decimal() + " is not a multiple of the tick " + tick.to_decimal());
    return q.num();
}

Rational to_time(Tick t, const Rational& tick) { return Rational(t) * tick; }

} // namespace stlmon
