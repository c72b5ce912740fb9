// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stlmon/rational.hpp"

namespace stlmon {

using Letter = Rational;
using ValueExpr = std::vector<Letter>;   // empty vector is the empty word
using ExprSet = std::set<ValueExpr>;

enum class Affix { prefix, suffix, infix, first };

// Builds a word from decimal digits, e.g. word("0110").
ValueExpr word(std::string_view digits);
ExprSet word_set(std::initializer_list<std::string_view> members);

// "0110" for digit words, "<3/2,2>" otherwise, "eps" for the empty word.
std::string to_string(const ValueExpr& u);
std::string to_string(const ExprSet& set);

bool is_canonical(const ValueExpr& u);
bool contains_empty(const ExprSet& set);
ExprSet without_empty(ExprSet set);

ValueExpr destutter(const ValueExpr& u);
ExprSet destutter(const ExprSet& set);

// Synchronized destutter: drops position i+1 only if every component repeats.
std::vector<ValueExpr> destutter_tuple(std::span<const ValueExpr> us);

// All words of length k whose destuttering equals destutter(u).
ExprSet stutter_k(const ValueExpr& u, std::size_t k);

ExprSet affix_closure(const ExprSet& set, Affix kind);

// Pairwise concatenation, not destuttered.
ExprSet concat_sets(const ExprSet& a, const ExprSet& b);

// destutter(concat_sets(a, b)) without the intermediate set.
ExprSet concat_destutter(const ExprSet& a, const ExprSet& b);

} // namespace stlmon
