// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/engine.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "stlmon/product.hpp"

namespace stlmon {

DistributedSignal apply_relative(const DistributedSignal& ds, std::string_view agent) {
    DistributedSignal out = ds;
    out.reference = ds.index_of(agent);
    return out;
}

MonitorContext::MonitorContext(const DistributedSignal& ds, EngineConfig cfg)
    : ds_(cfg.relative_agent ? apply_relative(ds, *cfg.relative_agent) : ds), cfg_(std::move(cfg)) {
    require_valid(ds_);
    seg_ = canonical_segmentation(ds_);
    gamma_ = GammaTable(ds_, seg_);
    for (std::size_t i = 0; i < ds_.signals.size(); ++i)
        regions_.push_back(uncertainty_regions(ds_.signals[i], ds_.skew_of(i), ds_.duration));
}

std::size_t MonitorContext::edges_touching(const std::vector<std::size_t>& signals, std::size_t j) const {
    Segment I = seg_[j];
    std::size_t n = 0;
    for (auto s : signals)
        for (const auto& r : regions_[s])
            if (r.lo < r.hi && r.lo < I.hi && r.hi > I.lo) ++n;
    return n;
}

// ---- atoms ----------------------------------------------------------------------

ExprSet eval_predicate(const Predicate& p, std::size_t segment, const MonitorContext& ctx) {
    const auto sig = p.signals();
    const Variant variant = ctx.config().variant;
    std::vector<Letter> values(ctx.trace().signals.size());
    auto holds = [&](std::span<const Letter> letters) {
        for (std::size_t k = 0; k < sig.size(); ++k) values[sig[k]] = letters[k];
        return p.holds(values);
    };
    if (sig.empty()) return ExprSet{ValueExpr{Letter(p.holds(values) ? 1 : 0)}};
    if (variant == Variant::adm_c && !p.is_monotone() && !ctx.config().assume_monotone)
        throw std::invalid_argument("coarse evaluation needs a monotone predicate: " + to_string(*p.lhs) + " ...");

    std::vector<const ExprSet*> sets;
    for (auto s : sig) sets.push_back(&ctx.gamma().at(s, segment));
    if (sig.size() == 1 || variant == Variant::adm) return product_map(sets, holds);

    // Fine / Coarse: achievable truth values from value sets or their extremes.
    std::vector<std::vector<Letter>> choices;
    for (const auto* set : sets) {
        std::set<Letter> letters;
        for (const auto& w : *set) letters.insert(w.begin(), w.end());
        if (variant == Variant::adm_c) choices.push_back({*letters.begin(), *letters.rbegin()});
        else choices.emplace_back(letters.begin(), letters.end());
    }
    bool with0 = false, with1 = false;
    std::vector<std::size_t> idx(choices.size(), 0);
    std::vector<Letter> combo(choices.size());
    for (;;) {
        for (std::size_t k = 0; k < choices.size(); ++k) combo[k] = choices[k][idx[k]];
        (holds(combo) ? with1 : with0) = true;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return all_words(with0, with1, 1 + ctx.edges_touching(sig, segment));
}

// ---- explicit backend ----------------------------------------------------------------

ExprSet ExplicitBackend::constant(bool b) { return ExprSet{ValueExpr{Letter(b ? 1 : 0)}}; }

ExprSet ExplicitBackend::negate(const ExprSet& s) {
    ExprSet out;
    for (const auto& u : s) out.insert(u.empty() ? u : bitwise_unary(u, Unary::negate));
    return out;
}

namespace {

// Closed sets (all shorter words of each present type) multiply in closed form.
// Large open operands are widened to their closure: sound, and it keeps the
// lattice walk off sets of long words.
constexpr std::size_t kWidenPairs = 4096;

bool closed(const ExprSet& s) { return !contains_empty(s) && concretize(summarize(s)).size() == s.size(); }

bool use_closed_form(const ExprSet& a, const ExprSet& b) {
    if (contains_empty(a) || contains_empty(b)) return false;
    return (closed(a) && closed(b)) || a.size() * b.size() > kWidenPairs;
}

} // namespace

ExprSet ExplicitBackend::conj(const ExprSet& a, const ExprSet& b) {
    if (use_closed_form(a, b)) return concretize(compact_and(summarize(a), summarize(b)));
    return product_binary(a, b, BinaryOp::conj);
}

ExprSet ExplicitBackend::disj(const ExprSet& a, const ExprSet& b) {
    if (use_closed_form(a, b)) return concretize(compact_or(summarize(a), summarize(b)));
    return product_binary(a, b, BinaryOp::disj);
}
ExprSet ExplicitBackend::until(const ExprSet& a, const ExprSet& b, bool tail0, bool tail1) {
    return product_until(a, b, tail0, tail1);
}
ExprSet ExplicitBackend::concat(const ExprSet& a, const ExprSet& b) {
    // only widened: the closed form of a concatenation is not exact
    if (!contains_empty(a) && !contains_empty(b) && a.size() * b.size() > kWidenPairs)
        return concretize(compact_concat(summarize(a), summarize(b)));
    return concat_destutter(a, b);
}
ExprSet ExplicitBackend::affix(const ExprSet& s, Affix kind) {
    if (closed(s)) return concretize(compact_affix(summarize(s), kind));
    return affix_closure(s, kind);
}
ExprSet ExplicitBackend::epsilon() { return ExprSet{ValueExpr{}}; }
ExprSet ExplicitBackend::drop_epsilon(ExprSet s) { return without_empty(std::move(s)); }

FirstLetters ExplicitBackend::first(const ExprSet& s) {
    FirstLetters f;
    for (const auto& u : s) {
        if (u.empty()) continue;
        (u.front() == Letter(0) ? f.zero : f.one) = true;
    }
    return f;
}

std::size_t ExplicitBackend::max_length(const ExprSet& s) {
    std::size_t m = 0;
    for (const auto& u : s) m = std::max(m, u.size());
    return m;
}

ExprSet ExplicitBackend::words(bool with0, bool with1, std::size_t max_len) { return all_words(with0, with1, max_len); }

CompactSet CompactBackend::words(bool with0, bool with1, std::size_t max_len) {
    return summarize(all_words(with0, with1, max_len));
}

ExprSet ExplicitBackend::truncate(ExprSet s, std::size_t max_len) {
    std::erase_if(s, [&](const ValueExpr& u) { return u.size() > max_len; });
    return s;
}

WordShapes ExplicitBackend::shapes(const ExprSet& s) {
    WordShapes w;
    for (const auto& u : s) {
        if (u.empty()) continue;
        const bool one = u.front() == Letter(1);
        if (u.size() == 1) (one ? w.short1 : w.short0) = true;
        else (one ? w.long1 : w.long0) = true;
    }
    return w;
}

// out[0] = 1 needs v to start with 1, or u to start with 1 while v rises before u
// falls; out[0] = 0 needs v to start with 0 and u to start with 0, fall first, or v
// never to rise.
FirstLetters until_first(const WordShapes& a, const WordShapes& b) {
    const bool a_any = a.short0 || a.short1 || a.long0 || a.long1;
    const bool a1 = a.short1 || a.long1;
    const bool a_drop = a.short0 || a.long0 || a.long1;  // starts with 0 or can fall
    FirstLetters f;
    f.one = b.short1 || b.long1 || (a1 && b.long0);
    f.zero = (b.long0 && a_drop) || (b.short0 && a_any);
    return f;
}

CompactSet CompactBackend::truncate(CompactSet s, std::size_t max_len) {
    for (bool f : {false, true})
        for (bool l : {false, true}) {
            auto& m = s.max_of(f, l);
            if (m <= max_len) continue;
            // same-type lengths share a parity
            m = static_cast<std::uint32_t>(max_len);
            if ((m % 2 == 1) != (f == l)) --m;
        }
    if (s.max00 == 0) s.has_0 = false;
    if (s.max11 == 0) s.has_1 = false;
    return s;
}

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
    const std::size_t top = std::numeric_limits<std::size_t>::max() / 8;
    return a >= top || b >= top || a + b >= top ? top : a + b;
}

std::size_t sat_mul(std::size_t k, std::size_t a) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r = sat_add(r, a);
    return r;
}

} // namespace

std::size_t change_bound(const Formula& f, const DistributedSignal& ds) {
    switch (f.op) {
    case Op::constant: return 0;
    case Op::atom: {
        std::size_t n = 0;
        for (auto s : f.pred->signals()) n += ds.signals.at(s).edges.size();
        return n;
    }
    case Op::negation: return change_bound(*f.lhs, ds);
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: return sat_add(change_bound(*f.lhs, ds), change_bound(*f.rhs, ds));
    case Op::until:
    case Op::eventually:
    case Op::always: {
        const bool until = f.op == Op::until;
        const std::size_t c1 = until ? change_bound(*f.lhs, ds) : 0;
        const std::size_t c2 = change_bound(until ? *f.rhs : *f.lhs, ds);
        const std::size_t c = sat_add(c1, c2);
        if (!f.is_timed()) return c;
        // changes happen where t, t+a or t+b meets a change of an operand, or t+a, t+b meets d
        const auto& J = *f.interval;
        const bool point = J.hi && *J.hi == J.lo;
        std::size_t n = sat_add(point ? c2 : sat_mul(2, c2), point ? 1 : 2);
        if (until) n = sat_add(n, sat_mul(point ? 2 : 3, c1));
        return n;
    }
    }
    return 0;
}

// ---- evaluator -------------------------------------------------------------------

namespace {

bool is_true(const FormulaPtr& f) { return f->op == Op::constant && f->truth; }

bool propositional(const Formula& f) {
    switch (f.op) {
    case Op::constant:
    case Op::atom: return true;
    case Op::negation: return propositional(*f.lhs);
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: return propositional(*f.lhs) && propositional(*f.rhs);
    default: return false;
    }
}

void collect_signals(const Formula& f, std::set<std::size_t>& out) {
    if (f.pred)
        for (auto s : f.pred->signals()) out.insert(s);
    if (f.lhs) collect_signals(*f.lhs, out);
    if (f.rhs) collect_signals(*f.rhs, out);
}

bool holds_at(const Formula& f, std::span<const Letter> values) {
    switch (f.op) {
    case Op::constant: return f.truth;
    case Op::atom: return f.pred->holds(values);
    case Op::negation: return !holds_at(*f.lhs, values);
    case Op::conjunction: return holds_at(*f.lhs, values) && holds_at(*f.rhs, values);
    case Op::disjunction: return holds_at(*f.lhs, values) || holds_at(*f.rhs, values);
    case Op::implication: return !holds_at(*f.lhs, values) || holds_at(*f.rhs, values);
    default: throw std::logic_error("holds_at: temporal operator");
    }
}

// A Boolean combination whose operands share a signal is evaluated as one
// n-ary predicate, so that both operands see the same interleaving.
std::optional<std::vector<std::size_t>> shared_propositional(const Formula& f) {
    if (!f.lhs || !f.rhs || !propositional(f)) return std::nullopt;
    std::set<std::size_t> a, b, all;
    collect_signals(*f.lhs, a);
    collect_signals(*f.rhs, b);
    bool shared = std::any_of(a.begin(), a.end(), [&](std::size_t s) { return b.count(s) > 0; });
    if (!shared) return std::nullopt;
    all.insert(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    return std::vector<std::size_t>(all.begin(), all.end());
}

Tick floor_half(Tick v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// J placed at t (half-ticks) and trimmed to [0, d).
struct Window {
    Tick lo2 = 0, hi2 = 0;
    bool lo_closed = true, hi_closed = false;
    bool empty = false;
};

Window trim(Tick lo2, Tick hi2, bool lc, bool hc, Tick d2) {
    Window w{lo2, hi2, lc, hc, false};
    if (w.hi2 >= d2) {
        w.hi2 = d2;
        w.hi_closed = false;
    }
    w.empty = w.lo2 >= d2 || w.lo2 > w.hi2 || (w.lo2 == w.hi2 && !(w.lo_closed && w.hi_closed));
    return w;
}

Window place(Tick t2, const TimeInterval& J, Tick d2) {
    Tick hi2 = J.hi ? t2 + 2 * *J.hi : std::numeric_limits<Tick>::max() / 4;
    return trim(t2 + 2 * J.lo, hi2, J.lo_closed, J.hi.has_value() && J.hi_closed, d2);
}

} // namespace

template <class B>
FormulaPtr Evaluator<B>::keep(FormulaPtr f) {
    owned_.push_back(f);
    return f;
}

template <class B>
const std::vector<typename B::Set>& Evaluator<B>::eval(const FormulaPtr& f) {
    if (auto it = memo_.find(f.get()); it != memo_.end()) return it->second;
    const std::size_t n = ctx_.segmentation().size();
    std::vector<Set> out;
    out.reserve(n);
    switch (f->op) {
    case Op::constant: out.assign(n, B::constant(f->truth)); break;
    case Op::atom:
        for (std::size_t j = 0; j < n; ++j) out.push_back(B::from_exprs(eval_predicate(*f->pred, j, ctx_)));
        break;
    case Op::negation:
        for (const auto& s : eval(f->lhs)) out.push_back(B::negate(s));
        break;
    case Op::conjunction:
    case Op::disjunction:
    case Op::implication: {
        if (auto sig = shared_propositional(*f)) {
            std::vector<Letter> values(ctx_.trace().signals.size());
            auto holds = [&](std::span<const Letter> letters) {
                for (std::size_t k = 0; k < sig->size(); ++k) values[(*sig)[k]] = letters[k];
                return holds_at(*f, values);
            };
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<const ExprSet*> sets;
                for (auto s : *sig) sets.push_back(&ctx_.gamma().at(s, j));
                out.push_back(B::from_exprs(product_map(sets, holds)));
            }
            break;
        }
        const auto& a = eval(f->lhs);
        const auto& b = eval(f->rhs);
        for (std::size_t j = 0; j < n; ++j) {
            if (f->op == Op::conjunction) out.push_back(B::conj(a[j], b[j]));
            else if (f->op == Op::disjunction) out.push_back(B::disj(a[j], b[j]));
            else out.push_back(B::disj(B::negate(a[j]), b[j]));
        }
        break;
    }
    case Op::until:
        out = f->interval ? eval_until(*f, f->lhs, f->rhs, *f->interval) : untimed_until(eval(f->lhs), eval(f->rhs));
        break;
    case Op::eventually:
        if (f->interval) out = eval_until(*f, keep(make_constant(true)), f->lhs, *f->interval);
        else out = untimed_until(std::vector<Set>(n, B::constant(true)), eval(f->lhs));
        break;
    case Op::always: {
        auto inner = keep(make_eventually(keep(make_not(f->lhs)), f->interval));
        for (const auto& s : eval(inner)) out.push_back(B::negate(s));
        break;
    }
    }
    const std::size_t cap = sat_add(sat_mul(2, change_bound(*f, ctx_.trace())), 1);
    for (auto& s : out) s = B::truncate(std::move(s), cap);
    owned_.push_back(f);  // pins the address used as memo key
    return memo_.emplace(f.get(), std::move(out)).first->second;
}

template <class B>
std::vector<typename B::Set> Evaluator<B>::untimed_until(const std::vector<Set>& a, const std::vector<Set>& b) const {
    std::vector<Set> out(a.size());
    FirstLetters next{true, false};  // past the end: {0}
    for (std::size_t j = a.size(); j-- > 0;) {
        out[j] = B::until(a[j], b[j], next.zero, next.one);
        next = B::first(out[j]);
    }
    return out;
}

template <class B>
std::vector<typename B::Set> Evaluator<B>::eval_until(const Formula& f, const FormulaPtr& lhs, const FormulaPtr& rhs,
                                                       const TimeInterval& J) {
    const bool trivial = is_true(lhs);
    if (J.is_untimed()) return untimed_until(eval(lhs), eval(rhs));
    if (J.lo == 0 || trivial) {
        if (J.lo == 0 && !J.lo_closed && !trivial) {
            // strict lower bound: phi1 U_(0,b> phi2 == phi1 & (phi1 U_[0,b> phi2)
            TimeInterval closed = J;
            closed.lo_closed = true;
            return eval(keep(make_and(lhs, keep(make_until(lhs, rhs, closed)))));
        }
        if (!J.hi) {
            if (J.lo == 0) return untimed_until(eval(lhs), eval(rhs));
            // F_[a,inf) phi == F_[a,a] F phi
            auto inner = keep(make_eventually(rhs));
            return eval(keep(make_eventually(inner, TimeInterval{J.lo, J.lo, true, true})));
        }
        const auto& t1 = eval(lhs);
        const auto& t2 = eval(rhs);
        std::vector<Set> out;
        const std::size_t cap = sat_add(sat_mul(2, change_bound(f, ctx_.trace())), 1);
        for (std::size_t j = 0; j < t1.size(); ++j) out.push_back(timed_until(t1, t2, J, j, cap));
        return out;
    }
    // a > 0 with a nontrivial left operand: guard the prefix explicitly.
    const Tick a = J.lo;
    std::optional<Tick> rest;
    if (J.hi) rest = *J.hi - a;
    auto inner = keep(make_until(lhs, rhs, TimeInterval{0, rest, true, J.hi_closed && rest.has_value()}));
    const TimeInterval point{a, a, true, true};
    FormulaPtr guard, tail;
    if (J.lo_closed) {
        guard = keep(make_always(lhs, TimeInterval{0, a, false, false}));
        tail = (rest && *rest == 0) ? rhs : keep(make_or(rhs, keep(make_and(lhs, inner))));
    } else {
        guard = keep(make_always(lhs, TimeInterval{0, a, false, true}));
        tail = inner;
    }
    return eval(keep(make_and(guard, keep(make_eventually(tail, point)))));
}

template <class B>
std::vector<typename Evaluator<B>::Placement> Evaluator<B>::placements(std::size_t j, const TimeInterval& J) const {
    const auto& seg = ctx_.segmentation();
    const Segment I = seg[j];
    std::set<Tick> crit{I.lo};
    for (Tick f : seg.points()) {
        for (Tick c : {f - J.lo, J.hi ? f - *J.hi : I.lo})
            if (c > I.lo && c < I.hi) crit.insert(c);
    }
    std::vector<Placement> out;
    for (auto it = crit.begin(); it != crit.end(); ++it) {
        auto nx = std::next(it);
        Tick end = nx == crit.end() ? I.hi : *nx;
        out.push_back({2 * *it, true});
        out.push_back({*it + end, false});
    }
    return out;
}

template <class B>
typename B::Set Evaluator<B>::window_profile(const std::vector<Set>& tau, Tick lo2, Tick hi2, bool lo_closed,
                                             bool hi_closed) const {
    const auto& seg = ctx_.segmentation();
    const auto& pts = seg.points();
    const std::size_t n = seg.size();
    const Window w = trim(lo2, hi2, lo_closed, hi_closed, 2 * seg.duration());
    if (w.empty) return B::epsilon();
    const std::size_t K = seg.find(floor_half(w.lo2));
    const Tick lK = 2 * pts[K], rK = 2 * pts[K + 1];
    const bool at_start = w.lo2 == lK;
    // a window piece of positive length shows at least one letter, so the
    // boundary affixes never contribute the empty word
    auto part = [&](std::size_t k, Affix kind) { return B::drop_epsilon(B::affix(tau[k], kind)); };
    Set acc;
    if (w.hi2 >= rK) acc = at_start ? tau[K] : part(K, Affix::suffix);
    else acc = part(K, at_start ? Affix::prefix : Affix::infix);

    if (w.hi2 <= rK) {
        if (w.hi2 == rK && w.hi_closed && K + 1 < n) acc = B::concat(acc, B::affix(tau[K + 1], Affix::first));
        return B::drop_epsilon(acc);
    }
    const std::size_t Kp = w.hi2 >= 2 * seg.duration() ? n : seg.find(floor_half(w.hi2));
    for (std::size_t m = K + 1; m < Kp; ++m) acc = B::concat(acc, tau[m]);
    if (Kp < n) {
        const bool on_point = w.hi2 % 2 == 0 && seg.is_point(w.hi2 / 2);
        if (!on_point) acc = B::concat(acc, part(Kp, Affix::prefix));
        else if (w.hi_closed) acc = B::concat(acc, B::affix(tau[Kp], Affix::first));
    }
    return B::drop_epsilon(acc);
}

template <class B>
typename B::Set Evaluator<B>::profile(const std::vector<Set>& tau, std::size_t j, const PlacedInterval& w) const {
    const Segment I = ctx_.segmentation()[j];
    if (w.lo < I.lo || w.lo >= I.hi) return B::epsilon();
    return window_profile(tau, 2 * w.lo, 2 * w.hi, w.lo_closed, w.hi_closed);
}

template <class B>
typename B::Set Evaluator<B>::kappa(const std::vector<Set>& tau, std::size_t j, const PlacedInterval& w) const {
    const auto& seg = ctx_.segmentation();
    const std::size_t end = w.hi >= seg.duration() ? seg.size() : seg.find(w.hi);
    Set acc = B::epsilon();
    for (std::size_t m = j + 1; m < end; ++m) acc = B::concat(acc, tau[m]);
    return acc;
}

template <class B>
std::vector<typename B::Set> Evaluator<B>::pfs(const std::vector<Set>& tau, std::size_t j, const TimeInterval& J) const {
    if (!J.hi) throw std::invalid_argument("pfs: unbounded interval");
    const Tick d2 = 2 * ctx_.segmentation().duration();
    std::vector<Set> out;
    for (const auto& p : placements(j, J)) {
        Window w = place(p.t2, J, d2);
        out.push_back(window_profile(tau, w.lo2, w.hi2, w.lo_closed, w.hi_closed));
    }
    return out;
}

template <class B>
typename B::Set Evaluator<B>::timed_until(const std::vector<Set>& tau1, const std::vector<Set>& tau2,
                                          const TimeInterval& J, std::size_t j, std::size_t max_len) const {
    if (!J.hi) throw std::invalid_argument("timed until: unbounded interval");
    const Tick d2 = 2 * ctx_.segmentation().duration();
    Set acc = B::epsilon();
    for (const auto& p : placements(j, J)) {
        Window w = place(p.t2, J, d2);
        Set cls;
        if (w.empty) {
            cls = B::constant(false);  // no witness time left in the domain
        } else {
            Set P = window_profile(tau1, w.lo2, w.hi2, w.lo_closed, w.hi_closed);
            Set Q = window_profile(tau2, w.lo2, w.hi2, w.lo_closed, w.hi_closed);
            if (ctx_.config().timed_rule == TimedRule::literal) {
                cls = B::until(P, Q, true, false);
            } else {
                const FirstLetters f = until_first(B::shapes(P), B::shapes(Q));
                std::size_t len = 1;
                if (!p.point) {
                    // truth can only change when an edge crosses one of the window ends
                    const auto& seg = ctx_.segmentation();
                    auto edges = [&](std::size_t k) { return B::max_length(tau1[k]) + B::max_length(tau2[k]) - 2; };
                    len += edges(seg.find(floor_half(w.lo2)));
                    if (w.hi2 < d2) len += edges(seg.find(floor_half(w.hi2)));
                }
                cls = B::words(f.zero, f.one, std::min(len, max_len));
            }
        }
        acc = B::truncate(B::concat(acc, cls), max_len);
    }
    return B::drop_epsilon(acc);
}

template class Evaluator<ExplicitBackend>;
template class Evaluator<CompactBackend>;

// ---- wrappers -----------------------------------------------------------------------

namespace {

std::size_t segment_index(const Segment& I, const MonitorContext& ctx) {
    auto j = ctx.segmentation().index_of(I);
    if (!j) throw std::invalid_argument("interval is not a segment of the canonical segmentation");
    return *j;
}

} // namespace

ExprSet eval_untimed(const FormulaPtr& phi, const Segment& I, const MonitorContext& ctx) {
    Evaluator<ExplicitBackend> ev(ctx);
    return ev.eval(phi)[segment_index(I, ctx)];
}

ExprSet kappa(const FormulaPtr& phi, const Segment& I, const PlacedInterval& w, const MonitorContext& ctx) {
    Evaluator<ExplicitBackend> ev(ctx);
    return ev.kappa(ev.eval(phi), segment_index(I, ctx), w);
}

ExprSet profile(const FormulaPtr& phi, const Segment& I, const PlacedInterval& w, const MonitorContext& ctx) {
    Evaluator<ExplicitBackend> ev(ctx);
    return ev.profile(ev.eval(phi), segment_index(I, ctx), w);
}

std::vector<ExprSet> pfs(const FormulaPtr& phi, const Segment& I, const TimeInterval& J, const MonitorContext& ctx) {
    Evaluator<ExplicitBackend> ev(ctx);
    return ev.pfs(ev.eval(phi), segment_index(I, ctx), J);
}

ExprSet eval_timed_until(const FormulaPtr& phi1, const FormulaPtr& phi2, const TimeInterval& J, const Segment& I,
                         const MonitorContext& ctx) {
    Evaluator<ExplicitBackend> ev(ctx);
    const auto& t1 = ev.eval(phi1);
    const auto& t2 = ev.eval(phi2);
    return ev.timed_until(t1, t2, J, segment_index(I, ctx));
}

} // namespace stlmon
