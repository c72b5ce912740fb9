// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "helpers.hpp"

using namespace stlmon;
using namespace stlmon::testing;

namespace {

ExprPair pair(const char* a, const char* b) { return {word(a), word(b)}; }

// Every canonical Boolean word of length 1..n.
std::vector<ValueExpr> canonical_words(std::size_t n) {
    std::vector<ValueExpr> out;
    for (std::size_t len = 1; len <= n; ++len)
        for (int first : {0, 1}) {
            ValueExpr w;
            for (std::size_t i = 0; i < len; ++i) w.push_back(Letter((first + static_cast<int>(i)) % 2));
            out.push_back(w);
        }
    return out;
}

// Strong until on finite words by its recursive definition.
bool until_at(const std::vector<bool>& u, const std::vector<bool>& v, std::size_t i, bool a) {
    if (i == u.size()) return a;
    if (v[i]) return true;
    return u[i] && until_at(u, v, i + 1, a);
}

ExprSet map_pairs(const ExprPairSet& pairs, const std::function<ValueExpr(const ValueExpr&, const ValueExpr&)>& f) {
    ExprSet out;
    for (const auto& [u, v] : pairs) out.insert(destutter(f(u, v)));
    return out;
}

} // namespace

TEST_CASE("asynchronous product examples") {
    auto p = async_product(word_set({"01"}), word_set({"10"}));
    CHECK(p == ExprPairSet{pair("011", "110"), pair("001", "100"), pair("01", "10")});
    CHECK(async_product(word_set({"0"}), word_set({"1"})) == ExprPairSet{pair("0", "1")});
    auto q = async_product(word_set({"010"}), word_set({"01"}));
    CHECK(q.count(pair("010", "011")) == 1);
    CHECK(q.count(pair("0010", "0111")) == 1);
    for (const auto& [u, v] : q) CHECK(u.size() <= 4);
    CHECK_THROWS(async_product(word_set({""}), word_set({"1"})));
}

TEST_CASE("asynchronous product matches the stuttering definition") {
    const auto words = canonical_words(7);
    for (const auto& u : words)
        for (const auto& v : words) {
            if (u.size() + v.size() > 8) continue;
            const ExprSet a{u}, b{v};
            const auto fast = async_product(a, b);
            CHECK(fast == async_product_reference(a, b));
            for (const auto& [x, y] : fast) {
                CHECK(x.size() == y.size());
                for (std::size_t i = 0; i + 1 < x.size(); ++i) CHECK_FALSE((x[i] == x[i + 1] && y[i] == y[i + 1]));
            }
        }
}

TEST_CASE("bitwise operators") {
    CHECK(bitwise_until(word("110"), word("010"), false) == word("110"));
    CHECK(bitwise_until(word("111"), word("000"), true) == word("111"));
    CHECK(bitwise_until(word("000"), word("000"), false) == word("000"));
    CHECK(bitwise_unary(word("010"), Unary::eventually) == word("110"));
    CHECK(bitwise_unary(word("010"), Unary::always) == word("000"));
    CHECK(bitwise_unary(word("010"), Unary::negate) == word("101"));
    CHECK(bitwise_unary(word("000"), Unary::eventually) == word("000"));
    CHECK_THROWS(bitwise_until(word("01"), word("0"), false));
    CHECK_THROWS(bitwise_unary(word(""), Unary::eventually));
}

TEST_CASE("bitwise until agrees with the recursive definition") {
    for (std::size_t len = 1; len <= 4; ++len)
        for (std::uint32_t mu = 0; mu < (1u << len); ++mu)
            for (std::uint32_t mv = 0; mv < (1u << len); ++mv) {
                std::vector<bool> u(len), v(len);
                for (std::size_t i = 0; i < len; ++i) {
                    u[i] = (mu >> i) & 1;
                    v[i] = (mv >> i) & 1;
                }
                for (bool a : {false, true}) {
                    const auto got = to_bits(bitwise_until(from_bits(u), from_bits(v), a));
                    for (std::size_t i = 0; i < len; ++i) CHECK(got[i] == until_at(u, v, i, a));
                }
            }
}

TEST_CASE("fused products equal product-then-map") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        auto a = random_set(rng, 3, 5), b = random_set(rng, 3, 5);
        const auto pairs = async_product(a, b);
        CHECK(product_binary(a, b, BinaryOp::conj) == map_pairs(pairs, bitwise_and));
        CHECK(product_binary(a, b, BinaryOp::disj) == map_pairs(pairs, bitwise_or));
        for (bool t0 : {false, true})
            for (bool t1 : {false, true}) {
                if (!t0 && !t1) continue;
                ExprSet expect;
                if (t0) expect.merge(map_pairs(pairs, [](auto& u, auto& v) { return bitwise_until(u, v, false); }));
                if (t1) expect.merge(map_pairs(pairs, [](auto& u, auto& v) { return bitwise_until(u, v, true); }));
                CHECK(product_until(a, b, t0, t1) == expect);
            }
        std::vector<const ExprSet*> sets{&a, &b};
        CHECK(product_map(sets, [](std::span<const Letter> l) { return l[0] == Letter(1) && l[1] == Letter(1); }) ==
              product_binary(a, b, BinaryOp::conj));
    }
}

TEST_CASE("untimed semantics on the running example") {
    const auto ds = running_example();
    const MonitorContext ctx(ds);
    // these expressions arise at [3,4), where 010 and 01 are both available
    CHECK(eval_untimed(parse(ds, "x1 & x2"), units(3, 4), ctx) == word_set({"0", "01", "010", "1", "10"}));
    CHECK(eval_untimed(parse(ds, "F (x1 & x2)"), units(3, 4), ctx) == word_set({"0", "1", "10"}));
    CHECK(eval_untimed(parse(ds, "x1 & x2"), units(5, 7), ctx) == word_set({"0", "10"}));
    CHECK(eval_untimed(parse(ds, "x1 & x2"), units(7, 8), ctx) == word_set({"0"}));
    // x2 may still be high when [7,8) starts, so the until can hold there
    CHECK(eval_untimed(parse(ds, "x1 U x2"), units(7, 8), ctx) == word_set({"0", "10"}));
    CHECK_THROWS(eval_untimed(parse(ds, "x1"), Segment{0, 3}, ctx));
}

TEST_CASE("untimed semantics properties") {
    Rng rng(23);
    for (int i = 0; i < 150; ++i) {
        auto ds = small_instance(rng);
        const auto names = ds.names();
        const MonitorContext ctx(ds);
        Evaluator<ExplicitBackend> ev(ctx);
        auto a = random_formula(rng, names, small_formulas(false));
        auto b = random_formula(rng, names, small_formulas(false));
        const auto& and_ab = ev.eval(make_and(a, b));
        const auto& and_ba = ev.eval(make_and(b, a));
        const auto& not_and = ev.eval(make_not(make_and(a, b)));
        const auto& or_nots = ev.eval(make_or(make_not(a), make_not(b)));
        const auto& ev_f = ev.eval(make_eventually(a));
        const auto& until_f = ev.eval(make_until(make_constant(true), a));
        const auto& g = ev.eval(make_always(a));
        const auto& not_f_not = ev.eval(make_not(make_eventually(make_not(a))));
        for (std::size_t j = 0; j < ctx.segmentation().size(); ++j) {
            CHECK(and_ab[j] == and_ba[j]);
            CHECK(not_and[j] == or_nots[j]);
            CHECK(ev_f[j] == until_f[j]);
            CHECK(g[j] == not_f_not[j]);
            for (const auto& w : and_ab[j]) CHECK((!w.empty() && is_canonical(w)));
            CHECK(!and_ab[j].empty());
        }
    }
}

TEST_CASE("shared signals are aligned once") {
    const auto ds = running_example();
    const MonitorContext ctx(ds);
    CHECK(eval_untimed(parse(ds, "x1 | !x1"), units(3, 4), ctx) == word_set({"1"}));
    CHECK(eval_untimed(parse(ds, "x1 & !x1"), units(3, 4), ctx) == word_set({"0"}));
}
