// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stlmon/trace.hpp"

namespace stlmon {

struct TimeInterval {
    Tick lo = 0;
    std::optional<Tick> hi;  // nullopt = +inf
    bool lo_closed = true;
    bool hi_closed = false;

    bool is_untimed() const { return lo == 0 && lo_closed && !hi; }
    bool contains(Tick t) const;
    friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

struct ArithExpr;
using ArithPtr = std::shared_ptr<const ArithExpr>;

struct ArithExpr {
    enum class Kind { constant, variable, add, sub, mul, neg, sqrt, square };
    Kind kind = Kind::constant;
    Rational value;          // constant
    std::size_t signal = 0;  // variable
    std::string name;        // variable
    ArithPtr lhs, rhs;
};

enum class Comparison { gt, ge, lt, le };

// Numeric value during predicate evaluation; sqrt of a non-square leaves the rationals.
struct Number {
    bool exact = true;
    Rational q;
    long double x = 0;
    long double approx() const { return exact ? q.to_long_double() : x; }
};

struct Predicate {
    ArithPtr lhs;
    Comparison cmp = Comparison::ge;
    ArithPtr rhs;
    bool bare = false;            // bare signal name, sugar for "x >= 1"
    bool declared_monotone = false;

    std::vector<std::size_t> signals() const;  // sorted, unique
    bool holds(std::span<const Letter> values) const;  // indexed by signal
    bool holds_single(const Letter& value) const;      // single-signal predicates
    bool is_monotone() const;
};

enum class Op { constant, atom, negation, conjunction, disjunction, implication, until, eventually, always };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    Op op = Op::constant;
    bool truth = true;  // constant
    std::shared_ptr<const Predicate> pred;
    FormulaPtr lhs, rhs;  // unary operators use lhs
    std::optional<TimeInterval> interval;  // temporal operators; nullopt = untimed

    bool is_timed() const { return interval && !interval->is_untimed(); }
};

FormulaPtr make_constant(bool value);
FormulaPtr make_atom(Predicate p);
FormulaPtr make_bool_atom(std::string name, std::size_t signal);
FormulaPtr make_not(FormulaPtr a);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr make_until(FormulaPtr a, FormulaPtr b, std::optional<TimeInterval> i = std::nullopt);
FormulaPtr make_eventually(FormulaPtr a, std::optional<TimeInterval> i = std::nullopt);
FormulaPtr make_always(FormulaPtr a, std::optional<TimeInterval> i = std::nullopt);

ArithPtr arith_const(Rational v);
ArithPtr arith_var(std::string name, std::size_t signal);
ArithPtr arith_binary(ArithExpr::Kind kind, ArithPtr a, ArithPtr b);
ArithPtr arith_unary(ArithExpr::Kind kind, ArithPtr a);

Number evaluate(const ArithExpr& e, std::span<const Letter> values);

bool structurally_equal(const Formula& a, const Formula& b);
bool structurally_equal(const ArithExpr& a, const ArithExpr& b);
bool contains_timed(const Formula& f);
std::size_t depth(const Formula& f);

std::string to_string(const Formula& f, const Rational& tick = Rational(1, 1'000'000'000));
std::string to_string(const ArithExpr& e);
std::string to_string(const TimeInterval& i, const Rational& tick);

// One warning per signal that occurs more than once.
std::vector<std::string> check_copyless(const Formula& f);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar: see docs/grammar.md.
FormulaPtr parse_formula(std::string_view text, std::span<const std::string> signals,
                         const Rational& tick = Rational(1, 1'000'000'000));

} // namespace stlmon
