// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/formula.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stlmon {

bool TimeInterval::contains(Tick t) const {
    if (t < lo || (t == lo && !lo_closed)) return false;
    if (!hi) return true;
    return t < *hi || (t == *hi && hi_closed);
}

// ---- construction ----------------------------------------------------------

namespace {

FormulaPtr node(Op op, FormulaPtr a = nullptr, FormulaPtr b = nullptr, std::optional<TimeInterval> i = std::nullopt) {
    auto f = std::make_shared<Formula>();
    f->op = op;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    if (i && i->is_untimed()) i.reset();
    f->interval = i;
    return f;
}

} // namespace

FormulaPtr make_constant(bool value) {
    auto f = std::make_shared<Formula>();
    f->op = Op::constant;
    f->truth = value;
    return f;
}

FormulaPtr make_atom(Predicate p) {
    auto f = std::make_shared<Formula>();
    f->op = Op::atom;
    f->pred = std::make_shared<const Predicate>(std::move(p));
    return f;
}

FormulaPtr make_bool_atom(std::string name, std::size_t signal) {
    Predicate p;
    p.lhs = arith_var(std::move(name), signal);
    p.cmp = Comparison::ge;
    p.rhs = arith_const(Rational(1));
    p.bare = true;
    return make_atom(std::move(p));
}

FormulaPtr make_not(FormulaPtr a) { return node(Op::negation, std::move(a)); }
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) { return node(Op::conjunction, std::move(a), std::move(b)); }
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) { return node(Op::disjunction, std::move(a), std::move(b)); }
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) { return node(Op::implication, std::move(a), std::move(b)); }
FormulaPtr make_until(FormulaPtr a, FormulaPtr b, std::optional<TimeInterval> i) {
    return node(Op::until, std::move(a), std::move(b), i);
}
FormulaPtr make_eventually(FormulaPtr a, std::optional<TimeInterval> i) { return node(Op::eventually, std::move(a), nullptr, i); }
FormulaPtr make_always(FormulaPtr a, std::optional<TimeInterval> i) { return node(Op::always, std::move(a), nullptr, i); }

ArithPtr arith_const(Rational v) {
    auto e = std::make_shared<ArithExpr>();
    e->kind = ArithExpr::Kind::constant;
    e->value = v;
    return e;
}

ArithPtr arith_var(std::string name, std::size_t signal) {
    auto e = std::make_shared<ArithExpr>();
    e->kind = ArithExpr::Kind::variable;
    e->name = std::move(name);
    e->signal = signal;
    return e;
}

ArithPtr arith_binary(ArithExpr::Kind kind, ArithPtr a, ArithPtr b) {
    auto e = std::make_shared<ArithExpr>();
    e->kind = kind;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ArithPtr arith_unary(ArithExpr::Kind kind, ArithPtr a) { return arith_binary(kind, std::move(a), nullptr); }

// ---- predicate evaluation ---------------------------------------------------

namespace {

Number inexact(long double x) { return Number{false, Rational(), x}; }

template <class ExactOp, class ApproxOp>
Number combine(const Number& a, const Number& b, ExactOp exact, ApproxOp approx) {
    if (a.exact && b.exact) {
        try {
            return Number{true, exact(a.q, b.q), 0};
        } catch (const std::overflow_error&) {
        }
    }
    return inexact(approx(a.approx(), b.approx()));
}

bool perfect_square(std::int64_t v, std::int64_t& root) {
    if (v < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
        if (c * c == v) {
            root = c;
            return true;
        }
    return false;
}

void collect_vars(const ArithExpr& e, std::vector<std::size_t>& out) {
    if (e.kind == ArithExpr::Kind::variable) out.push_back(e.signal);
    if (e.lhs) collect_vars(*e.lhs, out);
    if (e.rhs) collect_vars(*e.rhs, out);
}

bool is_constant_expr(const ArithExpr& e) {
    std::vector<std::size_t> v;
    collect_vars(e, v);
    return v.empty();
}

bool positive_constant(const ArithExpr& e) {
    if (!is_constant_expr(e)) return false;
    Number n = evaluate(e, {});
    return n.approx() > 0;
}

// Nondecreasing in every variable.
bool isotone(const ArithExpr& e) {
    using K = ArithExpr::Kind;
    switch (e.kind) {
    case K::constant:
    case K::variable: return true;
    case K::add: return isotone(*e.lhs) && isotone(*e.rhs);
    case K::sub: return isotone(*e.lhs) && is_constant_expr(*e.rhs);
    case K::mul:
        return (positive_constant(*e.lhs) && isotone(*e.rhs)) || (isotone(*e.lhs) && positive_constant(*e.rhs));
    default: return is_constant_expr(e);
    }
}

} // namespace

Number evaluate(const ArithExpr& e, std::span<const Letter> values) {
    using K = ArithExpr::Kind;
    switch (e.kind) {
    case K::constant: return Number{true, e.value, 0};
    case K::variable: return Number{true, values[e.signal], 0};
    case K::add:
        return combine(evaluate(*e.lhs, values), evaluate(*e.rhs, values),
                       [](auto a, auto b) { return a + b; }, [](auto a, auto b) { return a + b; });
    case K::sub:
        return combine(evaluate(*e.lhs, values), evaluate(*e.rhs, values),
                       [](auto a, auto b) { return a - b; }, [](auto a, auto b) { return a - b; });
    case K::mul:
        return combine(evaluate(*e.lhs, values), evaluate(*e.rhs, values),
                       [](auto a, auto b) { return a * b; }, [](auto a, auto b) { return a * b; });
    case K::square: {
        Number a = evaluate(*e.lhs, values);
        return combine(a, a, [](auto x, auto y) { return x * y; }, [](auto x, auto y) { return x * y; });
    }
    case K::neg: {
        Number a = evaluate(*e.lhs, values);
        if (a.exact) return Number{true, -a.q, 0};
        return inexact(-a.x);
    }
    case K::sqrt: {
        Number a = evaluate(*e.lhs, values);
        if (a.approx() < 0) throw std::domain_error("sqrt of a negative value");
        std::int64_t rn = 0, rd = 0;
        if (a.exact && perfect_square(a.q.num(), rn) && perfect_square(a.q.den(), rd))
            return Number{true, Rational(rn, rd), 0};
        return inexact(std::sqrt(a.approx()));
    }
    }
    return Number{};
}

std::vector<std::size_t> Predicate::signals() const {
    std::vector<std::size_t> out;
    collect_vars(*lhs, out);
    collect_vars(*rhs, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Predicate::holds(std::span<const Letter> values) const {
    Number a = evaluate(*lhs, values);
    Number b = evaluate(*rhs, values);
    int c;
    if (a.exact && b.exact) c = a.q < b.q ? -1 : (a.q == b.q ? 0 : 1);
    else c = a.approx() < b.approx() ? -1 : (a.approx() == b.approx() ? 0 : 1);
    switch (cmp) {
    case Comparison::gt: return c > 0;
    case Comparison::ge: return c >= 0;
    case Comparison::lt: return c < 0;
    case Comparison::le: return c <= 0;
    }
    return false;
}

bool Predicate::holds_single(const Letter& value) const {
    auto sig = signals();
    std::vector<Letter> values(sig.empty() ? 1 : sig.back() + 1);
    if (!sig.empty()) values[sig.front()] = value;
    return holds(values);
}

bool Predicate::is_monotone() const {
    if (bare || declared_monotone) return true;
    return (isotone(*lhs) && is_constant_expr(*rhs)) || (is_constant_expr(*lhs) && isotone(*rhs));
}

// ---- structure ---------------------------------------------------------------

bool structurally_equal(const ArithExpr& a, const ArithExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ArithExpr::Kind::constant) return a.value == b.value;
    if (a.kind == ArithExpr::Kind::variable) return a.signal == b.signal && a.name == b.name;
    if (!!a.lhs != !!b.lhs || !!a.rhs != !!b.rhs) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    return !a.rhs || structurally_equal(*a.rhs, *b.rhs);
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.op != b.op || a.interval != b.interval) return false;
    if (a.op == Op::constant) return a.truth == b.truth;
    if (a.op == Op::atom)
        return a.pred->cmp == b.pred->cmp && a.pred->bare == b.pred->bare &&
               structurally_equal(*a.pred->lhs, *b.pred->lhs) && structurally_equal(*a.pred->rhs, *b.pred->rhs);
    if (!!a.lhs != !!b.lhs || !!a.rhs != !!b.rhs) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    return !a.rhs || structurally_equal(*a.rhs, *b.rhs);
}

bool contains_timed(const Formula& f) {
    if (f.is_timed()) return true;
    return (f.lhs && contains_timed(*f.lhs)) || (f.rhs && contains_timed(*f.rhs));
}

std::size_t depth(const Formula& f) {
    std::size_t d = 0;
    if (f.lhs) d = std::max(d, depth(*f.lhs));
    if (f.rhs) d = std::max(d, depth(*f.rhs));
    return (f.op == Op::atom || f.op == Op::constant) ? 0 : d + 1;
}

// ---- printing -----------------------------------------------------------------

namespace {

int arith_level(const ArithExpr& e) {
    using K = ArithExpr::Kind;
    switch (e.kind) {
    case K::add:
    case K::sub: return 1;
    case K::mul: return 2;
    case K::neg: return 3;
    case K::constant: return e.value < Rational(0) ? 3 : 4;
    default: return 4;
    }
}

std::string arith_at(const ArithExpr& e, int min_level) {
    std::string s = to_string(e);
    return arith_level(e) < min_level ? "(" + s + ")" : s;
}

std::string constant_text(const Rational& v) {
    std::string d = v.to_decimal();
    if (d.find('/') == std::string::npos) return d;
    return "(" + std::to_string(v.num()) + "/" + std::to_string(v.den()) + ")";
}

// Formula precedence: implication 1, disjunction 2, conjunction 3, until 4, prefix 5.
int level(const Formula& f) {
    switch (f.op) {
    case Op::implication: return 1;
    case Op::disjunction: return 2;
    case Op::conjunction: return 3;
    case Op::until: return 4;
    default: return 5;
    }
}

std::string at(const Formula& f, int min_level, const Rational& tick) {
    std::string s = to_string(f, tick);
    return level(f) < min_level ? "(" + s + ")" : s;
}

const char* cmp_text(Comparison c) {
    switch (c) {
    case Comparison::gt: return ">";
    case Comparison::ge: return ">=";
    case Comparison::lt: return "<";
    case Comparison::le: return "<=";
    }
    return "?";
}

} // namespace

std::string to_string(const ArithExpr& e) {
    using K = ArithExpr::Kind;
    switch (e.kind) {
    case K::constant: return constant_text(e.value);
    case K::variable: return e.name;
    case K::add: return arith_at(*e.lhs, 1) + " + " + arith_at(*e.rhs, 2);
    case K::sub: return arith_at(*e.lhs, 1) + " - " + arith_at(*e.rhs, 2);
    case K::mul: return arith_at(*e.lhs, 2) + " * " + arith_at(*e.rhs, 3);
    case K::neg: return "-" + arith_at(*e.lhs, 4);
    case K::sqrt: return "sqrt(" + to_string(*e.lhs) + ")";
    case K::square: return "sq(" + to_string(*e.lhs) + ")";
    }
    return "?";
}

std::string to_string(const TimeInterval& i, const Rational& tick) {
    std::string s = i.lo_closed ? "[" : "(";
    s += to_time(i.lo, tick).to_decimal() + ",";
    s += i.hi ? to_time(*i.hi, tick).to_decimal() : "inf";
    s += i.hi_closed ? "]" : ")";
    return s;
}

std::string to_string(const Formula& f, const Rational& tick) {
    auto iv = [&]() { return f.interval ? to_string(*f.interval, tick) : std::string(); };
    switch (f.op) {
    case Op::constant: return f.truth ? "true" : "false";
    case Op::atom:
        if (f.pred->bare) return f.pred->lhs->name;
        return to_string(*f.pred->lhs) + " " + cmp_text(f.pred->cmp) + " " + to_string(*f.pred->rhs);
    case Op::negation: return "!" + at(*f.lhs, 5, tick);
    case Op::eventually: return "F" + iv() + " " + at(*f.lhs, 5, tick);
    case Op::always: return "G" + iv() + " " + at(*f.lhs, 5, tick);
    case Op::until: return at(*f.lhs, 5, tick) + " U" + iv() + " " + at(*f.rhs, 4, tick);
    case Op::conjunction: return at(*f.lhs, 3, tick) + " & " + at(*f.rhs, 4, tick);
    case Op::disjunction: return at(*f.lhs, 2, tick) + " | " + at(*f.rhs, 3, tick);
    case Op::implication: return at(*f.lhs, 2, tick) + " -> " + at(*f.rhs, 1, tick);
    }
    return "?";
}

std::vector<std::string> check_copyless(const Formula& f) {
    std::map<std::string, std::size_t> count;
    auto visit_arith = [&](auto&& self, const ArithExpr& e) -> void {
        if (e.kind == ArithExpr::Kind::variable) ++count[e.name];
        if (e.lhs) self(self, *e.lhs);
        if (e.rhs) self(self, *e.rhs);
    };
    auto visit = [&](auto&& self, const Formula& g) -> void {
        if (g.op == Op::atom) {
            visit_arith(visit_arith, *g.pred->lhs);
            visit_arith(visit_arith, *g.pred->rhs);
        }
        if (g.lhs) self(self, *g.lhs);
        if (g.rhs) self(self, *g.rhs);
    };
    visit(visit, f);
    std::vector<std::string> out;
    for (const auto& [name, n] : count)
        if (n > 1) out.push_back(name + " occurs " + std::to_string(n) + "x");
    return out;
}

} // namespace stlmon
