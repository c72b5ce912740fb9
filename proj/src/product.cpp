// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/product.hpp"

#include <stdexcept>

namespace stlmon {
namespace {

void require_nonempty(const ValueExpr& u) {
    if (u.empty()) throw std::invalid_argument("asynchronous product of the empty word");
}

void walk(const ValueExpr& u, const ValueExpr& v, std::size_t i, std::size_t j, ExprPair& cur, ExprPairSet& out) {
    cur.first.push_back(u[i]);
    cur.second.push_back(v[j]);
    if (i + 1 == u.size() && j + 1 == v.size()) {
        out.insert(cur);
    } else {
        if (i + 1 < u.size()) walk(u, v, i + 1, j, cur, out);
        if (j + 1 < v.size()) walk(u, v, i, j + 1, cur, out);
        if (i + 1 < u.size() && j + 1 < v.size()) walk(u, v, i + 1, j + 1, cur, out);
    }
    cur.first.pop_back();
    cur.second.pop_back();
}

Letter bit_letter(bool b) { return Letter(b ? 1 : 0); }

bool letter_bit(const Letter& l) {
    if (l == Letter(0)) return false;
    if (l == Letter(1)) return true;
    throw std::invalid_argument("non-Boolean letter " + l.to_string());
}

ValueExpr alternating(bool first, std::size_t len) {
    ValueExpr w;
    w.reserve(len);
    for (std::size_t k = 0; k < len; ++k) w.push_back(bit_letter(first != (k % 2 == 1)));
    return w;
}

std::vector<bool> canonical_bits(const ValueExpr& u) {
    require_nonempty(u);
    return to_bits(destutter(u));
}

} // namespace

ExprPairSet async_product(const ExprSet& a, const ExprSet& b) {
    ExprPairSet out;
    ExprPair cur;
    for (const auto& u0 : a)
        for (const auto& v0 : b) {
            require_nonempty(u0);
            require_nonempty(v0);
            walk(destutter(u0), destutter(v0), 0, 0, cur, out);
        }
    return out;
}

ExprPairSet async_product_reference(const ExprSet& a, const ExprSet& b) {
    ExprPairSet out;
    for (const auto& u : a)
        for (const auto& v : b) {
            require_nonempty(u);
            require_nonempty(v);
            std::size_t k = u.size() + v.size() - 1;
            for (const auto& s1 : stutter_k(u, k))
                for (const auto& s2 : stutter_k(v, k)) {
                    ValueExpr pair[2] = {s1, s2};
                    auto d = destutter_tuple(pair);
                    out.insert({d[0], d[1]});
                }
        }
    return out;
}

std::vector<bool> to_bits(const ValueExpr& u) {
    std::vector<bool> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = letter_bit(u[i]);
    return out;
}

ValueExpr from_bits(const std::vector<bool>& bits) {
    ValueExpr out;
    out.reserve(bits.size());
    for (bool b : bits) out.push_back(bit_letter(b));
    return out;
}

ValueExpr bitwise_until(const ValueExpr& u, const ValueExpr& v, bool a) {
    if (u.size() != v.size()) throw std::invalid_argument("bitwise_until: length mismatch");
    auto bu = to_bits(u), bv = to_bits(v);
    std::vector<bool> out(u.size());
    bool next = a;
    for (std::size_t i = u.size(); i-- > 0;) {
        next = bv[i] || (bu[i] && next);
        out[i] = next;
    }
    return from_bits(out);
}

ValueExpr bitwise_unary(const ValueExpr& u, Unary op) {
    if (u.empty()) throw std::invalid_argument("bitwise operator on the empty word");
    auto b = to_bits(u);
    switch (op) {
    case Unary::negate:
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = !b[i];
        break;
    case Unary::eventually:
        for (std::size_t i = b.size() - 1; i-- > 0;) b[i] = b[i] || b[i + 1];
        break;
    case Unary::always:
        for (std::size_t i = b.size() - 1; i-- > 0;) b[i] = b[i] && b[i + 1];
        break;
    }
    return from_bits(b);
}

ValueExpr bitwise_and(const ValueExpr& u, const ValueExpr& v) {
    if (u.size() != v.size()) throw std::invalid_argument("bitwise_and: length mismatch");
    auto a = to_bits(u), b = to_bits(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
    return from_bits(a);
}

ValueExpr bitwise_or(const ValueExpr& u, const ValueExpr& v) {
    if (u.size() != v.size()) throw std::invalid_argument("bitwise_or: length mismatch");
    auto a = to_bits(u), b = to_bits(v);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
    return from_bits(a);
}

ExprSet product_binary(const ExprSet& a, const ExprSet& b, BinaryOp op) {
    ExprSet out;
    for (const auto& u0 : a)
        for (const auto& v0 : b) {
            auto u = canonical_bits(u0), v = canonical_bits(v0);
            const std::size_t m = u.size(), n = v.size(), len_cap = m + n;
            auto bit = [&](std::size_t i, std::size_t j) { return op == BinaryOp::conj ? (u[i] && v[j]) : (u[i] || v[j]); };
            // reach[i][j][len]: a walk ending at (i, j) has destuttered output length len
            std::vector<std::vector<char>> reach(m * n, std::vector<char>(len_cap + 1, 0));
            reach[0][1] = 1;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& here = reach[i * n + j];
                    const bool b0 = bit(i, j);
                    auto push = [&](std::size_t i2, std::size_t j2) {
                        auto& there = reach[i2 * n + j2];
                        const std::size_t step = bit(i2, j2) != b0 ? 1 : 0;
                        for (std::size_t len = 1; len + step <= len_cap; ++len)
                            if (here[len]) there[len + step] = 1;
                    };
                    if (i + 1 < m) push(i + 1, j);
                    if (j + 1 < n) push(i, j + 1);
                    if (i + 1 < m && j + 1 < n) push(i + 1, j + 1);
                }
            const auto& fin = reach[m * n - 1];
            for (std::size_t len = 1; len <= len_cap; ++len)
                if (fin[len]) out.insert(alternating(bit(0, 0), len));
        }
    return out;
}

ExprSet product_until(const ExprSet& a, const ExprSet& b, bool tail0, bool tail1) {
    ExprSet out;
    for (const auto& u0 : a)
        for (const auto& v0 : b) {
            auto u = canonical_bits(u0), v = canonical_bits(v0);
            const std::size_t m = u.size(), n = v.size(), len_cap = m + n;
            // reach[cell][out][len], walking right to left
            auto idx = [&](std::size_t i, std::size_t j, bool o) { return ((i * n + j) * 2 + (o ? 1 : 0)); };
            std::vector<std::vector<char>> reach(m * n * 2, std::vector<char>(len_cap + 1, 0));
            for (bool tail : {false, true}) {
                if ((tail && !tail1) || (!tail && !tail0)) continue;
                bool o = v[n - 1] || (u[m - 1] && tail);
                reach[idx(m - 1, n - 1, o)][1] = 1;
            }
            for (std::size_t i = m; i-- > 0;)
                for (std::size_t j = n; j-- > 0;)
                    for (bool o : {false, true}) {
                        const auto& here = reach[idx(i, j, o)];
                        auto pull = [&](std::size_t i2, std::size_t j2) {
                            bool o2 = v[j2] || (u[i2] && o);
                            auto& there = reach[idx(i2, j2, o2)];
                            const std::size_t step = o2 != o ? 1 : 0;
                            for (std::size_t len = 1; len + step <= len_cap; ++len)
                                if (here[len]) there[len + step] = 1;
                        };
                        if (i > 0) pull(i - 1, j);
                        if (j > 0) pull(i, j - 1);
                        if (i > 0 && j > 0) pull(i - 1, j - 1);
                    }
            for (bool o : {false, true}) {
                const auto& fin = reach[idx(0, 0, o)];
                for (std::size_t len = 1; len <= len_cap; ++len)
                    if (fin[len]) out.insert(alternating(o, len));
            }
        }
    return out;
}

ExprSet product_map(const std::vector<const ExprSet*>& sets, const std::function<bool(std::span<const Letter>)>& f) {
    ExprSet out;
    const std::size_t k = sets.size();
    if (k == 0) {
        out.insert(ValueExpr{bit_letter(f({}))});
        return out;
    }
    std::vector<std::vector<ValueExpr>> words(k);
    for (std::size_t c = 0; c < k; ++c)
        for (const auto& w : *sets[c]) {
            require_nonempty(w);
            words[c].push_back(destutter(w));
        }
    for (const auto& w : words)
        if (w.empty()) return out;
    std::vector<std::size_t> choice(k, 0);
    std::vector<Letter> letters(k);
    for (;;) {
        // one combination of words
        std::vector<std::size_t> dims(k), stride(k);
        std::size_t cells = 1, len_cap = 1;
        for (std::size_t c = 0; c < k; ++c) {
            dims[c] = words[c][choice[c]].size();
            stride[c] = cells;
            cells *= dims[c];
            len_cap += dims[c] - 1;
        }
        std::vector<char> bits(cells);
        std::vector<std::size_t> coord(k);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::size_t r = cell;
            for (std::size_t c = 0; c < k; ++c) {
                coord[c] = r % dims[c];
                r /= dims[c];
                letters[c] = words[c][choice[c]][coord[c]];
            }
            bits[cell] = f(letters) ? 1 : 0;
        }
        std::vector<std::vector<char>> reach(cells, std::vector<char>(len_cap + 1, 0));
        reach[0][1] = 1;
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::size_t r = cell;
            for (std::size_t c = 0; c < k; ++c) {
                coord[c] = r % dims[c];
                r /= dims[c];
            }
            // every nonempty subset of advanceable coordinates
            for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
                std::size_t next = cell;
                bool ok = true;
                for (std::size_t c = 0; c < k && ok; ++c)
                    if (mask >> c & 1) {
                        if (coord[c] + 1 >= dims[c]) ok = false;
                        else next += stride[c];
                    }
                if (!ok) continue;
                const std::size_t step = bits[next] != bits[cell] ? 1 : 0;
                for (std::size_t len = 1; len + step <= len_cap; ++len)
                    if (reach[cell][len]) reach[next][len + step] = 1;
            }
        }
        for (std::size_t len = 1; len <= len_cap; ++len)
            if (reach[cells - 1][len]) out.insert(alternating(bits[0] != 0, len));

        std::size_t c = 0;
        while (c < k && ++choice[c] == words[c].size()) choice[c++] = 0;
        if (c == k) break;
    }
    return out;
}

ExprSet all_words(bool with0, bool with1, std::size_t max_len) {
    ExprSet out;
    if (with0 && with1) {
        for (std::size_t len = 1; len <= max_len; ++len) {
            out.insert(alternating(false, len));
            out.insert(alternating(true, len));
        }
    } else if (with0) {
        out.insert(ValueExpr{Letter(0)});
    } else if (with1) {
        out.insert(ValueExpr{Letter(1)});
    }
    return out;
}

} // namespace stlmon
