// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "stlmon/words.hpp"

namespace stlmon {

using ExprPair = std::pair<ValueExpr, ValueExpr>;
using ExprPairSet = std::set<ExprPair>;

// Interleavings of canonical words, enumerated as monotone lattice walks.
ExprPairSet async_product(const ExprSet& a, const ExprSet& b);
// Literal stutter_k construction, kept as the reference for tests.
ExprPairSet async_product_reference(const ExprSet& a, const ExprSet& b);

enum class Unary { eventually, always, negate };

ValueExpr bitwise_until(const ValueExpr& u, const ValueExpr& v, bool a);
ValueExpr bitwise_unary(const ValueExpr& u, Unary op);
ValueExpr bitwise_and(const ValueExpr& u, const ValueExpr& v);
ValueExpr bitwise_or(const ValueExpr& u, const ValueExpr& v);

// Boolean word as bits; letters must be 0 or 1.
std::vector<bool> to_bits(const ValueExpr& u);
ValueExpr from_bits(const std::vector<bool>& bits);

// destutter({u op v | (u, v) in a (x) b}) computed by dynamic programming over the
// interleaving lattice, without materialising the product.
enum class BinaryOp { conj, disj };
ExprSet product_binary(const ExprSet& a, const ExprSet& b, BinaryOp op);
// destutter({u U^a v | (u, v) in a (x) b}), for each a in `tails` (subset of {0,1}).
ExprSet product_until(const ExprSet& a, const ExprSet& b, bool tail0, bool tail1);

// n-ary product mapped letterwise through f, then destuttered.
ExprSet product_map(const std::vector<const ExprSet*>& sets, const std::function<bool(std::span<const Letter>)>& f);

// All canonical Boolean words of length in [1, max_len] over the bits in `alphabet`.
ExprSet all_words(bool with0, bool with1, std::size_t max_len);

} // namespace stlmon
