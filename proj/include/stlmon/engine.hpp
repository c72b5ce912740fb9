// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stlmon/compact.hpp"
#include "stlmon/formula.hpp"
#include "stlmon/trace.hpp"

namespace stlmon {

enum class Variant { adm, adm_f, adm_c };
enum class SetBackend { explicit_sets, compact };
// literal: each placement class contributes its whole bitwise-until words.
// sound: a class contributes only the truth values at its placements.
enum class TimedRule { sound, literal };

struct EngineConfig {
    Variant variant = Variant::adm;
    std::optional<std::string> relative_agent;
    SetBackend backend = SetBackend::explicit_sets;
    bool assume_monotone = false;  // lets Adm-C accept predicates it cannot classify
    TimedRule timed_rule = TimedRule::sound;
};

// Reference agent gets zero-width uncertainty regions.
DistributedSignal apply_relative(const DistributedSignal& ds, std::string_view agent);

// Everything an evaluation reads: the (possibly relative) trace, G_S and gamma.
class MonitorContext {
public:
    MonitorContext(const DistributedSignal& ds, EngineConfig cfg = {});

    const DistributedSignal& trace() const { return ds_; }
    const Segmentation& segmentation() const { return seg_; }
    const GammaTable& gamma() const { return gamma_; }
    const EngineConfig& config() const { return cfg_; }
    // Edges of the given signals whose uncertainty region meets segment j.
    std::size_t edges_touching(const std::vector<std::size_t>& signals, std::size_t j) const;

private:
    DistributedSignal ds_;
    EngineConfig cfg_;
    Segmentation seg_;
    GammaTable gamma_;
    std::vector<std::vector<UncertaintyRegion>> regions_;
};

// Which (first letter, length 1 or longer) combinations a set of Boolean words has.
struct WordShapes {
    bool short0 = false, short1 = false, long0 = false, long1 = false;
};

// First letters of destutter({u U0 v | (u, v) in a (x) b}) from the shapes alone.
FirstLetters until_first(const WordShapes& a, const WordShapes& b);

// Window J placed at some time, in ticks.
struct PlacedInterval {
    Tick lo = 0, hi = 0;
    bool lo_closed = true, hi_closed = false;
};

struct ExplicitBackend {
    using Set = ExprSet;
    static Set constant(bool b);
    static Set from_exprs(const ExprSet& s) { return s; }
    static ExprSet to_exprs(const Set& s) { return s; }
    static Set negate(const Set& s);
    static Set conj(const Set& a, const Set& b);
    static Set disj(const Set& a, const Set& b);
    static Set until(const Set& a, const Set& b, bool tail0, bool tail1);
    static Set concat(const Set& a, const Set& b);
    static Set affix(const Set& s, Affix kind);
    static Set epsilon();
    static Set drop_epsilon(Set s);
    static FirstLetters first(const Set& s);
    static std::size_t max_length(const Set& s);
    static Set words(bool with0, bool with1, std::size_t max_len);
    static Set truncate(Set s, std::size_t max_len);
    static WordShapes shapes(const Set& s);
};

struct CompactBackend {
    using Set = CompactSet;
    static Set constant(bool b) { return compact_singleton(b); }
    static Set from_exprs(const ExprSet& s) { return summarize(s); }
    static ExprSet to_exprs(const Set& s) { return concretize(s); }
    static Set negate(const Set& s) { return compact_not(s); }
    static Set conj(const Set& a, const Set& b) { return compact_and(a, b); }
    static Set disj(const Set& a, const Set& b) { return compact_or(a, b); }
    static Set until(const Set& a, const Set& b, bool tail0, bool tail1) { return compact_until(a, b, tail0, tail1); }
    static Set concat(const Set& a, const Set& b) { return compact_concat(a, b); }
    static Set affix(const Set& s, Affix kind) { return compact_affix(s, kind); }
    static Set epsilon() {
        CompactSet s;
        s.has_eps = true;
        return s;
    }
    static Set drop_epsilon(Set s) { return compact_without_empty(s); }
    static FirstLetters first(const Set& s) { return compact_first(s); }
    static std::size_t max_length(const Set& s) {
        return std::max({s.max00, s.max01, s.max10, s.max11});
    }
    static Set words(bool with0, bool with1, std::size_t max_len);
    static Set truncate(Set s, std::size_t max_len);
    static WordShapes shapes(const Set& s) {
        return {s.has_0, s.has_1, s.max01 >= 2 || s.max00 >= 3, s.max10 >= 2 || s.max11 >= 3};
    }
};

// Upper bound on the number of time points at which the satisfaction signal of
// f can change, over every synchronous trace consistent with ds.
std::size_t change_bound(const Formula& f, const DistributedSignal& ds);

// Satisfaction sets of an atom over one segment, per the configured variant.
ExprSet eval_predicate(const Predicate& p, std::size_t segment, const MonitorContext& ctx);

template <class B>
class Evaluator {
public:
    using Set = typename B::Set;

    explicit Evaluator(const MonitorContext& ctx) : ctx_(ctx) {}

    // One set per segment of G_S.
    const std::vector<Set>& eval(const FormulaPtr& f);

    // Placement classes of J over segment j; representatives in half-ticks.
    struct Placement {
        Tick t2 = 0;        // representative start time, in half-ticks
        bool point = true;  // class is a single placement
    };
    std::vector<Placement> placements(std::size_t j, const TimeInterval& J) const;

    // Profile of the window w (half-ticks), relative to the segment containing
    // its left end. Returns {eps} for an empty window.
    Set window_profile(const std::vector<Set>& tau, Tick lo2, Tick hi2, bool lo_closed, bool hi_closed) const;
    // Literal profile with respect to segment j: {eps} unless the window starts inside j.
    Set profile(const std::vector<Set>& tau, std::size_t j, const PlacedInterval& w) const;
    Set kappa(const std::vector<Set>& tau, std::size_t j, const PlacedInterval& w) const;
    std::vector<Set> pfs(const std::vector<Set>& tau, std::size_t j, const TimeInterval& J) const;
    // max_len: known bound on the length of the result words in segment j.
    Set timed_until(const std::vector<Set>& tau1, const std::vector<Set>& tau2, const TimeInterval& J, std::size_t j,
                    std::size_t max_len = std::numeric_limits<std::size_t>::max()) const;

private:
    std::vector<Set> untimed_until(const std::vector<Set>& a, const std::vector<Set>& b) const;
    std::vector<Set> eval_until(const Formula& f, const FormulaPtr& lhs, const FormulaPtr& rhs, const TimeInterval& J);
    FormulaPtr keep(FormulaPtr f);

    const MonitorContext& ctx_;
    std::unordered_map<const Formula*, std::vector<Set>> memo_;
    std::vector<FormulaPtr> owned_;
};

extern template class Evaluator<ExplicitBackend>;
extern template class Evaluator<CompactBackend>;

// Explicit-backend wrappers, one per set-level operation.
ExprSet eval_untimed(const FormulaPtr& phi, const Segment& I, const MonitorContext& ctx);
ExprSet kappa(const FormulaPtr& phi, const Segment& I, const PlacedInterval& w, const MonitorContext& ctx);
ExprSet profile(const FormulaPtr& phi, const Segment& I, const PlacedInterval& w, const MonitorContext& ctx);
std::vector<ExprSet> pfs(const FormulaPtr& phi, const Segment& I, const TimeInterval& J, const MonitorContext& ctx);
ExprSet eval_timed_until(const FormulaPtr& phi1, const FormulaPtr& phi2, const TimeInterval& J, const Segment& I,
                         const MonitorContext& ctx);

} // namespace stlmon
