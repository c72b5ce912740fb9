// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "stlmon/words.hpp"

namespace stlmon {

// Summary of a set of canonical Boolean words by (first bit, last bit) type.
// C(s) holds every canonical word whose length is at most the maximum of its
// type; length-1 words additionally need their flag.
struct CompactSet {
    std::uint32_t max00 = 0, max01 = 0, max10 = 0, max11 = 0;
    bool has_0 = false, has_1 = false;
    bool has_eps = false;  // the empty word; needed by prefix/suffix/concat

    std::uint32_t max_of(bool first, bool last) const;
    std::uint32_t& max_of(bool first, bool last);
    bool empty() const { return !has_eps && max00 == 0 && max01 == 0 && max10 == 0 && max11 == 0; }
    bool well_formed() const;
    friend bool operator==(const CompactSet&, const CompactSet&) = default;
};

std::string to_string(const CompactSet& s);

CompactSet summarize(const ExprSet& set);
ExprSet concretize(const CompactSet& s);

struct FirstLetters {
    bool zero = false, one = false;
    friend bool operator==(const FirstLetters&, const FirstLetters&) = default;
};

CompactSet compact_singleton(bool bit);
CompactSet compact_not(const CompactSet& s);
CompactSet compact_union(const CompactSet& a, const CompactSet& b);
CompactSet compact_concat(const CompactSet& a, const CompactSet& b);
CompactSet compact_affix(const CompactSet& s, Affix kind);
CompactSet compact_without_empty(CompactSet s);
FirstLetters compact_first(const CompactSet& s);
CompactSet compact_and(const CompactSet& a, const CompactSet& b);
CompactSet compact_or(const CompactSet& a, const CompactSet& b);
CompactSet compact_until(const CompactSet& a, const CompactSet& b, bool tail0, bool tail1);
// Reference semantics of the product operators: union over every pair of
// members of C(a) x C(b) of the memoised single-pair derivation table.
CompactSet compact_and_table(const CompactSet& a, const CompactSet& b);

enum class CompactOp { conj, disj, negate, until0, until1, concat, prefix, suffix, infix, first };
// FIRST encodes its result as a CompactSet over the single letters.
CompactSet compact_apply(CompactOp op, std::span<const CompactSet> args);

} // namespace stlmon
