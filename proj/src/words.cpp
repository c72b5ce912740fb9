// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/words.hpp"

#include <stdexcept>

namespace stlmon {

ValueExpr word(std::string_view digits) {
    ValueExpr u;
    u.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word: not a digit");
        u.emplace_back(c - '0');
    }
    return u;
}

ExprSet word_set(std::initializer_list<std::string_view> members) {
    ExprSet s;
    for (auto m : members) s.insert(word(m));
    return s;
}

std::string to_string(const ValueExpr& u) {
    if (u.empty()) return "eps";
    bool digits = true;
    for (const auto& l : u)
        if (!l.is_integer() || l.num() < 0 || l.num() > 9) digits = false;
    std::string out;
    if (digits) {
        for (const auto& l : u) out.push_back(static_cast<char>('0' + l.num()));
        return out;
    }
    out = "<";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ',';
        out += u[i].to_string();
    }
    return out + ">";
}

std::string to_string(const ExprSet& set) {
    std::string out = "{";
    bool first = true;
    for (const auto& u : set) {
        if (!first) out += ", ";
        first = false;
        out += to_string(u);
    }
    return out + "}";
}

bool is_canonical(const ValueExpr& u) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u[i] == u[i - 1]) return false;
    return true;
}

bool contains_empty(const ExprSet& set) { return set.count(ValueExpr{}) != 0; }

ExprSet without_empty(ExprSet set) {
    set.erase(ValueExpr{});
    return set;
}

ValueExpr destutter(const ValueExpr& u) {
    ValueExpr out;
    out.reserve(u.size());
    for (const auto& l : u)
        if (out.empty() || out.back() != l) out.push_back(l);
    return out;
}

ExprSet destutter(const ExprSet& set) {
    ExprSet out;
    for (const auto& u : set) out.insert(destutter(u));
    return out;
}

std::vector<ValueExpr> destutter_tuple(std::span<const ValueExpr> us) {
    std::vector<ValueExpr> out(us.size());
    if (us.empty()) return out;
    const std::size_t n = us[0].size();
    for (const auto& u : us)
        if (u.size() != n) throw std::invalid_argument("destutter_tuple: length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        bool all_repeat = i > 0;
        for (std::size_t c = 0; c < us.size() && all_repeat; ++c)
            if (us[c][i] != us[c][i - 1]) all_repeat = false;
        if (all_repeat) continue;
        for (std::size_t c = 0; c < us.size(); ++c) out[c].push_back(us[c][i]);
    }
    return out;
}

namespace {

// Distributes k positions over the letters of w, each at least once.
void compositions(const ValueExpr& w, std::size_t idx, std::size_t left, ValueExpr& cur, ExprSet& out) {
    if (idx + 1 == w.size()) {
        cur.insert(cur.end(), left, w[idx]);
        out.insert(cur);
        cur.resize(cur.size() - left);
        return;
    }
    std::size_t rest = w.size() - idx - 1;
    for (std::size_t r = 1; r + rest <= left; ++r) {
        cur.insert(cur.end(), r, w[idx]);
        compositions(w, idx + 1, left - r, cur, out);
        cur.resize(cur.size() - r);
    }
}

} // namespace

ExprSet stutter_k(const ValueExpr& u, std::size_t k) {
    ValueExpr w = destutter(u);
    ExprSet out;
    if (w.empty()) {
        if (k == 0) out.insert(ValueExpr{});
        return out;
    }
    if (k < w.size()) return out;
    ValueExpr cur;
    cur.reserve(k);
    compositions(w, 0, k, cur, out);
    return out;
}

ExprSet affix_closure(const ExprSet& set, Affix kind) {
    ExprSet out;
    for (const auto& u : set) {
        const std::size_t n = u.size();
        switch (kind) {
        case Affix::prefix:
            for (std::size_t len = 0; len <= n; ++len) out.emplace(u.begin(), u.begin() + len);
            break;
        case Affix::suffix:
            for (std::size_t start = 0; start <= n; ++start) out.emplace(u.begin() + start, u.end());
            break;
        case Affix::infix:
            out.insert(ValueExpr{});
            for (std::size_t start = 0; start < n; ++start)
                for (std::size_t end = start + 1; end <= n; ++end) out.emplace(u.begin() + start, u.begin() + end);
            break;
        case Affix::first:
            if (u.empty()) throw std::invalid_argument("first: set contains the empty word");
            out.insert(ValueExpr{u.front()});
            break;
        }
    }
    return out;
}

ExprSet concat_sets(const ExprSet& a, const ExprSet& b) {
    ExprSet out;
    for (const auto& u : a)
        for (const auto& v : b) {
            ValueExpr w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.insert(std::move(w));
        }
    return out;
}

ExprSet concat_destutter(const ExprSet& a, const ExprSet& b) {
    ExprSet out;
    for (const auto& u : a)
        for (const auto& v : b) {
            ValueExpr w = destutter(u);
            for (const auto& l : v)
                if (w.empty() || w.back() != l) w.push_back(l);
            out.insert(std::move(w));
        }
    return out;
}

} // namespace stlmon
