// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace stlmon {

// Exact rational with normalized int64 parts (den > 0, gcd(num, den) = 1).
// Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    // Accepts "12", "-0.25", "1e-9", "2.5E3" and "3/4".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    long double to_long_double() const;

    // "3", "-1/2"
    std::string to_string() const;
    // Exact decimal when the denominator divides a power of ten, else to_string().
    std::string to_decimal() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::int64_t checked_gcd(std::int64_t a, std::int64_t b);

} // namespace stlmon

template <>
struct std::hash<stlmon::Rational> {
    std::size_t operator()(const stlmon::Rational& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
    }
};
