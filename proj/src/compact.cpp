// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/compact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "stlmon/product.hpp"

namespace stlmon {
namespace {

bool last_bit(bool first, std::uint32_t len) { return len % 2 == 1 ? first : !first; }

// Records one word (first, len) in s.
void add_word(CompactSet& s, bool first, std::uint32_t len) {
    if (len == 0) {
        s.has_eps = true;
        return;
    }
    auto& m = s.max_of(first, last_bit(first, len));
    m = std::max(m, len);
    if (len == 1) (first ? s.has_1 : s.has_0) = true;
}

// Every member length of C(s) for one type.
template <class F>
void for_lengths(const CompactSet& s, bool first, bool last, F&& f) {
    std::uint32_t top = s.max_of(first, last);
    std::uint32_t start = first == last ? 1 : 2;
    for (std::uint32_t len = start; len <= top; len += 2) {
        if (len == 1 && !(first ? s.has_1 : s.has_0)) continue;
        f(len);
    }
}

template <class F>
void for_members(const CompactSet& s, F&& f) {
    for (bool first : {false, true})
        for (bool last : {false, true}) for_lengths(s, first, last, [&](std::uint32_t len) { f(first, len); });
}

CompactSet normalized(CompactSet s) {
    if (s.max00 == 1 && !s.has_0) s.max00 = 0;
    if (s.max11 == 1 && !s.has_1) s.max11 = 0;
    if (s.max00 == 0) s.has_0 = false;
    if (s.max11 == 0) s.has_1 = false;
    return s;
}

ValueExpr alternating(bool first, std::uint32_t len) {
    ValueExpr w;
    for (std::uint32_t k = 0; k < len; ++k) w.emplace_back((first != (k % 2 == 1)) ? 1 : 0);
    return w;
}

enum class PairOp { conj, until0, until1 };

// Single-pair derivation table, computed once per entry by the explicit kernels.
const CompactSet& pair_entry(PairOp op, bool fa, std::uint32_t la, bool fb, std::uint32_t lb) {
    using Key = std::tuple<int, bool, std::uint32_t, bool, std::uint32_t>;
    thread_local std::map<Key, CompactSet> memo;
    Key key{static_cast<int>(op), fa, la, fb, lb};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    ExprSet a{alternating(fa, la)}, b{alternating(fb, lb)};
    ExprSet r = op == PairOp::conj ? product_binary(a, b, BinaryOp::conj)
                                   : product_until(a, b, op == PairOp::until0, op == PairOp::until1);
    return memo.emplace(key, summarize(r)).first->second;
}

CompactSet pairwise(PairOp op, const CompactSet& a, const CompactSet& b) {
    CompactSet out;
    for_members(a, [&](bool fa, std::uint32_t la) {
        for_members(b, [&](bool fb, std::uint32_t lb) { out = compact_union(out, pair_entry(op, fa, la, fb, lb)); });
    });
    return out;
}

std::uint32_t ones(bool first, std::uint32_t len) { return first ? (len + 1) / 2 : len / 2; }

} // namespace

std::uint32_t CompactSet::max_of(bool first, bool last) const {
    return first ? (last ? max11 : max10) : (last ? max01 : max00);
}

std::uint32_t& CompactSet::max_of(bool first, bool last) {
    return first ? (last ? max11 : max10) : (last ? max01 : max00);
}

bool CompactSet::well_formed() const {
    auto odd_or_zero = [](std::uint32_t v) { return v == 0 || v % 2 == 1; };
    auto even = [](std::uint32_t v) { return v % 2 == 0; };
    if (!odd_or_zero(max00) || !odd_or_zero(max11) || !even(max01) || !even(max10)) return false;
    if (has_0 && max00 < 1) return false;
    if (has_1 && max11 < 1) return false;
    if (max00 == 1 && !has_0) return false;
    if (max11 == 1 && !has_1) return false;
    return true;
}

std::string to_string(const CompactSet& s) {
    return "(00:" + std::to_string(s.max00) + " 01:" + std::to_string(s.max01) + " 10:" + std::to_string(s.max10) +
           " 11:" + std::to_string(s.max11) + (s.has_0 ? " +0" : "") + (s.has_1 ? " +1" : "") +
           (s.has_eps ? " +eps" : "") + ")";
}

CompactSet summarize(const ExprSet& set) {
    CompactSet s;
    for (const auto& u : set) {
        if (u.empty()) {
            s.has_eps = true;
            continue;
        }
        if (!is_canonical(u)) throw std::invalid_argument("summarize: word is not destuttered");
        for (const auto& l : u)
            if (l != Letter(0) && l != Letter(1)) throw std::invalid_argument("summarize: non-Boolean letter");
        add_word(s, u.front() == Letter(1), static_cast<std::uint32_t>(u.size()));
    }
    return s;
}

ExprSet concretize(const CompactSet& s) {
    ExprSet out;
    if (s.has_eps) out.insert(ValueExpr{});
    for_members(s, [&](bool first, std::uint32_t len) { out.insert(alternating(first, len)); });
    return out;
}

CompactSet compact_singleton(bool bit) {
    CompactSet s;
    add_word(s, bit, 1);
    return s;
}

CompactSet compact_not(const CompactSet& s) {
    CompactSet r;
    r.max00 = s.max11;
    r.max11 = s.max00;
    r.max01 = s.max10;
    r.max10 = s.max01;
    r.has_0 = s.has_1;
    r.has_1 = s.has_0;
    r.has_eps = s.has_eps;
    return r;
}

CompactSet compact_union(const CompactSet& a, const CompactSet& b) {
    CompactSet r;
    r.max00 = std::max(a.max00, b.max00);
    r.max01 = std::max(a.max01, b.max01);
    r.max10 = std::max(a.max10, b.max10);
    r.max11 = std::max(a.max11, b.max11);
    r.has_0 = a.has_0 || b.has_0;
    r.has_1 = a.has_1 || b.has_1;
    r.has_eps = a.has_eps || b.has_eps;
    return r;
}

CompactSet compact_concat(const CompactSet& a, const CompactSet& b) {
    CompactSet r;
    for (bool f1 : {false, true})
        for (bool l1 : {false, true}) {
            std::uint32_t m = a.max_of(f1, l1);
            if (m == 0) continue;
            for (bool f2 : {false, true})
                for (bool l2 : {false, true}) {
                    std::uint32_t n = b.max_of(f2, l2);
                    if (n == 0) continue;
                    auto& t = r.max_of(f1, l2);
                    t = std::max(t, m + n - (l1 == f2 ? 1u : 0u));
                }
        }
    if (b.has_eps) r = compact_union(r, CompactSet{a.max00, a.max01, a.max10, a.max11, a.has_0, a.has_1, false});
    if (a.has_eps) r = compact_union(r, CompactSet{b.max00, b.max01, b.max10, b.max11, b.has_0, b.has_1, false});
    // single letters only arise from single letters
    r.has_0 = (a.has_0 && (b.has_0 || b.has_eps)) || (a.has_eps && b.has_0);
    r.has_1 = (a.has_1 && (b.has_1 || b.has_eps)) || (a.has_eps && b.has_1);
    r.has_eps = a.has_eps && b.has_eps;
    return normalized(r);
}

CompactSet compact_affix(const CompactSet& s, Affix kind) {
    if (kind == Affix::first) {
        auto f = compact_first(s);
        CompactSet r;
        if (f.zero) add_word(r, false, 1);
        if (f.one) add_word(r, true, 1);
        return r;
    }
    CompactSet r;
    r.has_eps = true;
    auto upto = [&](bool first, std::uint32_t top) {
        for (std::uint32_t len = 1; len <= top && len <= 2; ++len) add_word(r, first, len);
        if (top >= 3) {
            add_word(r, first, top);
            add_word(r, first, top - 1);
        }
    };
    for (bool first : {false, true})
        for (bool last : {false, true}) {
            std::uint32_t m = s.max_of(first, last);
            if (m == 0) continue;
            switch (kind) {
            case Affix::prefix: upto(first, m); break;
            case Affix::suffix:
                // suffixes of length k end in `last` and start with last ^ (k even)
                for (std::uint32_t len : {m, m - 1, 1u, 2u})
                    if (len >= 1 && len <= m) add_word(r, (len % 2 == 1) ? last : !last, len);
                break;
            case Affix::infix:
                upto(first, m);
                if (m >= 2) upto(!first, m - 1);
                break;
            case Affix::first: break;
            }
        }
    return normalized(r);
}

CompactSet compact_without_empty(CompactSet s) {
    s.has_eps = false;
    return s;
}

FirstLetters compact_first(const CompactSet& s) {
    return {s.max00 > 0 || s.max01 > 0, s.max10 > 0 || s.max11 > 0};
}

namespace {

// Members of the given type with length <= 3.
ExprSet short_members(const CompactSet& s, bool f, bool l) {
    ExprSet out;
    const std::uint32_t m = s.max_of(f, l);
    for (std::uint32_t len = 1; len <= std::min<std::uint32_t>(m, 3); ++len) {
        if (len == 1 && (f != l || !(f ? s.has_1 : s.has_0))) continue;
        ValueExpr w;
        for (std::uint32_t i = 0; i < len; ++i) w.push_back(Letter(((i % 2 == 0) == f) ? 1 : 0));
        if ((w.back() == Letter(1)) == l) out.insert(w);
    }
    return out;
}

bool zero_reachable(const ExprSet& a, const ExprSet& b) {
    if (a.empty() || b.empty()) return false;
    return product_binary(a, b, BinaryOp::conj).count(ValueExpr{Letter(0)}) > 0;
}

} // namespace

CompactSet compact_and(const CompactSet& a, const CompactSet& b) {
    // Per pair of member types: output type (fa & fb, la & lb); the number of
    // 1-blocks is at most ones(u) + ones(v) - 1, reached by the longest members.
    CompactSet r;
    for (bool fa : {false, true})
        for (bool la : {false, true}) {
            std::uint32_t m = a.max_of(fa, la);
            if (m == 0) continue;
            for (bool fb : {false, true})
                for (bool lb : {false, true}) {
                    std::uint32_t n = b.max_of(fb, lb);
                    if (n == 0) continue;
                    const bool f = fa && fb, l = la && lb;
                    const std::uint32_t oa = ones(fa, m), ob = ones(fb, n);
                    if (oa == 0 || ob == 0) {
                        add_word(r, false, 1);
                        continue;
                    }
                    const std::uint32_t k = oa + ob - 1;
                    add_word(r, f, 2 * k - 1 + (f ? 0 : 1) + (l ? 0 : 1));
                    // "1" needs both operands to be exactly "1"
                    if (fa && la && fb && lb && a.has_1 && b.has_1) add_word(r, true, 1);
                    // "0": zeroing inner 1-blocks maps any member onto a word of
                    // length <= 3 of the same type, so those decide the flag.
                    if (!f && !l && zero_reachable(short_members(a, fa, la), short_members(b, fb, lb)))
                        add_word(r, false, 1);
                }
        }
    return normalized(r);
}

CompactSet compact_or(const CompactSet& a, const CompactSet& b) {
    return compact_not(compact_and(compact_not(a), compact_not(b)));
}

CompactSet compact_until(const CompactSet& a, const CompactSet& b, bool tail0, bool tail1) {
    CompactSet r;
    if (tail0) r = compact_union(r, pairwise(PairOp::until0, a, b));
    if (tail1) r = compact_union(r, pairwise(PairOp::until1, a, b));
    return r;
}

CompactSet compact_and_table(const CompactSet& a, const CompactSet& b) { return pairwise(PairOp::conj, a, b); }

CompactSet compact_apply(CompactOp op, std::span<const CompactSet> args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw std::invalid_argument("compact_apply: arity mismatch");
    };
    switch (op) {
    case CompactOp::conj: need(2); return compact_and(args[0], args[1]);
    case CompactOp::disj: need(2); return compact_or(args[0], args[1]);
    case CompactOp::negate: need(1); return compact_not(args[0]);
    case CompactOp::until0: need(2); return compact_until(args[0], args[1], true, false);
    case CompactOp::until1: need(2); return compact_until(args[0], args[1], false, true);
    case CompactOp::concat: need(2); return compact_concat(args[0], args[1]);
    case CompactOp::prefix: need(1); return compact_affix(args[0], Affix::prefix);
    case CompactOp::suffix: need(1); return compact_affix(args[0], Affix::suffix);
    case CompactOp::infix: need(1); return compact_affix(args[0], Affix::infix);
    case CompactOp::first: need(1); return compact_affix(args[0], Affix::first);
    }
    throw std::invalid_argument("compact_apply: unknown operator");
}

} // namespace stlmon
