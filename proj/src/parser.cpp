// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>

#include "stlmon/formula.hpp"

namespace stlmon {
namespace {

enum class Tok { end, ident, number, lparen, rparen, lbrack, rbrack, comma, bang, amp, bar, arrow, plus, minus, star, slash, cmp };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '.')) ++j;
            t.kind = Tok::ident;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
            if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    j = k;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                }
            }
            t.kind = Tok::number;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else {
            auto two = s.substr(i, 2);
            if (two == "->") { t.kind = Tok::arrow; i += 2; }
            else if (two == "&&") { t.kind = Tok::amp; i += 2; }
            else if (two == "||") { t.kind = Tok::bar; i += 2; }
            else if (two == ">=" || two == "<=") { t.kind = Tok::cmp; t.text = std::string(two); i += 2; }
            else {
                switch (c) {
                case '(': t.kind = Tok::lparen; break;
                case ')': t.kind = Tok::rparen; break;
                case '[': t.kind = Tok::lbrack; break;
                case ']': t.kind = Tok::rbrack; break;
                case ',': t.kind = Tok::comma; break;
                case '!': case '~': t.kind = Tok::bang; break;
                case '&': t.kind = Tok::amp; break;
                case '|': t.kind = Tok::bar; break;
                case '+': t.kind = Tok::plus; break;
                case '-': t.kind = Tok::minus; break;
                case '*': t.kind = Tok::star; break;
                case '/': t.kind = Tok::slash; break;
                case '>': case '<': t.kind = Tok::cmp; t.text = std::string(1, c); break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", i);
                }
                ++i;
            }
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

bool keyword(const std::string& s) {
    return s == "F" || s == "G" || s == "U" || s == "true" || s == "false" || s == "sqrt" || s == "sq" || s == "inf";
}

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> signals, const Rational& tick)
        : toks_(lex(text)), signals_(signals), tick_(tick) {}

    FormulaPtr parse() {
        FormulaPtr f = implication();
        if (peek().kind != Tok::end) fail("unexpected trailing input");
        return f;
    }

private:
    struct Backtrack {};

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }
    bool is_ident(const char* s) const { return peek().kind == Tok::ident && peek().text == s; }

    FormulaPtr implication() {
        FormulaPtr a = disjunction();
        if (accept(Tok::arrow)) return make_implies(a, implication());
        return a;
    }

    FormulaPtr disjunction() {
        FormulaPtr a = conjunction();
        while (accept(Tok::bar)) a = make_or(a, conjunction());
        return a;
    }

    FormulaPtr conjunction() {
        FormulaPtr a = until();
        while (accept(Tok::amp)) a = make_and(a, until());
        return a;
    }

    FormulaPtr until() {
        FormulaPtr a = unary();
        if (is_ident("U")) {
            ++pos_;
            auto iv = maybe_interval();
            return make_until(a, until(), iv);
        }
        return a;
    }

    FormulaPtr unary() {
        if (accept(Tok::bang)) return make_not(unary());
        if (is_ident("F") || is_ident("G")) {
            bool ev = peek().text == "F";
            ++pos_;
            auto iv = maybe_interval();
            FormulaPtr a = unary();
            return ev ? make_eventually(a, iv) : make_always(a, iv);
        }
        return primary();
    }

    // '[' or '(' NUMBER ',' starts an interval.
    bool interval_ahead() const {
        if (peek().kind == Tok::lbrack) return true;
        return peek().kind == Tok::lparen && peek(1).kind == Tok::number && peek(2).kind == Tok::comma;
    }

    std::optional<TimeInterval> maybe_interval() {
        if (!interval_ahead()) return std::nullopt;
        std::size_t start = peek().pos;
        TimeInterval iv;
        iv.lo_closed = peek().kind == Tok::lbrack;
        ++pos_;
        iv.lo = time_value();
        expect(Tok::comma, "','");
        if (is_ident("inf")) {
            ++pos_;
        } else {
            iv.hi = time_value();
        }
        if (accept(Tok::rbrack)) iv.hi_closed = true;
        else if (accept(Tok::rparen)) iv.hi_closed = false;
        else fail("expected ')' or ']'");
        if (!iv.hi && iv.hi_closed) throw ParseError("malformed interval: unbounded upper end must be open", start);
        if (iv.hi && *iv.hi < iv.lo) throw ParseError("malformed interval: lower bound exceeds upper bound", start);
        if (iv.hi && *iv.hi == iv.lo && !(iv.lo_closed && iv.hi_closed))
            throw ParseError("malformed interval: empty", start);
        return iv;
    }

    Tick time_value() {
        if (peek().kind != Tok::number) fail("expected a time bound");
        Rational v = Rational::parse(peek().text);
        try {
            Tick t = to_ticks(v, tick_);
            ++pos_;
            return t;
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    FormulaPtr primary() {
        if (is_ident("true")) { ++pos_; return make_constant(true); }
        if (is_ident("false")) { ++pos_; return make_constant(false); }
        if (peek().kind == Tok::lparen) {
            // Either an arithmetic predicate or a parenthesised formula.
            std::size_t save = pos_;
            try {
                FormulaPtr p = predicate(true);
                if (p) return p;
            } catch (const Backtrack&) {
            } catch (const ParseError&) {
            }
            pos_ = save;
            ++pos_;
            FormulaPtr f = implication();
            expect(Tok::rparen, "')'");
            return f;
        }
        FormulaPtr p = predicate(false);
        if (!p) fail("expected a formula");
        return p;
    }

    // Returns nullptr-free predicate, or throws Backtrack when speculative parsing fails.
    FormulaPtr predicate(bool speculative) {
        std::size_t start = pos_;
        ArithPtr lhs = arith();
        if (peek().kind != Tok::cmp) {
            if (lhs->kind == ArithExpr::Kind::variable) return make_bool_atom(lhs->name, lhs->signal);
            if (speculative) throw Backtrack{};
            fail("expected a comparison");
        }
        (void)start;
        Predicate p;
        const std::string& c = peek().text;
        p.cmp = c == ">" ? Comparison::gt : c == ">=" ? Comparison::ge : c == "<" ? Comparison::lt : Comparison::le;
        ++pos_;
        p.lhs = lhs;
        p.rhs = arith();
        return make_atom(std::move(p));
    }

    ArithPtr arith() {
        ArithPtr a = term();
        for (;;) {
            if (accept(Tok::plus)) a = fold(ArithExpr::Kind::add, a, term());
            else if (accept(Tok::minus)) a = fold(ArithExpr::Kind::sub, a, term());
            else return a;
        }
    }

    ArithPtr term() {
        ArithPtr a = factor();
        for (;;) {
            if (accept(Tok::star)) {
                a = fold(ArithExpr::Kind::mul, a, factor());
            } else if (peek().kind == Tok::slash) {
                std::size_t at = peek().pos;
                ++pos_;
                ArithPtr d = factor();
                if (d->kind != ArithExpr::Kind::constant || d->value == Rational(0))
                    throw ParseError("division only by a nonzero constant", at);
                a = fold(ArithExpr::Kind::mul, a, arith_const(Rational(1) / d->value));
            } else {
                return a;
            }
        }
    }

    ArithPtr fold(ArithExpr::Kind k, ArithPtr a, ArithPtr b) {
        using K = ArithExpr::Kind;
        if (a->kind == K::constant && b->kind == K::constant) {
            if (k == K::add) return arith_const(a->value + b->value);
            if (k == K::sub) return arith_const(a->value - b->value);
            if (k == K::mul) return arith_const(a->value * b->value);
        }
        return arith_binary(k, a, b);
    }

    ArithPtr factor() {
        if (accept(Tok::minus)) {
            ArithPtr a = factor();
            if (a->kind == ArithExpr::Kind::constant) return arith_const(-a->value);
            return arith_unary(ArithExpr::Kind::neg, a);
        }
        if (peek().kind == Tok::number) {
            Rational v = Rational::parse(peek().text);
            ++pos_;
            return arith_const(v);
        }
        if (accept(Tok::lparen)) {
            ArithPtr a = arith();
            if (!accept(Tok::rparen)) throw Backtrack{};
            return a;
        }
        if (peek().kind == Tok::ident) {
            std::string name = peek().text;
            if (name == "sqrt" || name == "sq") {
                ++pos_;
                expect(Tok::lparen, "'('");
                ArithPtr a = arith();
                expect(Tok::rparen, "')'");
                return arith_unary(name == "sqrt" ? ArithExpr::Kind::sqrt : ArithExpr::Kind::square, a);
            }
            if (keyword(name)) fail("unexpected keyword '" + name + "'");
            for (std::size_t i = 0; i < signals_.size(); ++i)
                if (signals_[i] == name) {
                    ++pos_;
                    return arith_var(name, i);
                }
            fail("undeclared signal '" + name + "'");
        }
        fail("expected an operand");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::span<const std::string> signals_;
    Rational tick_;
};

} // namespace

FormulaPtr parse_formula(std::string_view text, std::span<const std::string> signals, const Rational& tick) {
    return Parser(text, signals, tick).parse();
}

} // namespace stlmon
