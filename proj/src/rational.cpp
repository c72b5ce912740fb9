// Copyright 2026 The stlmon Authors
// SPDX-License-Identifier: Apache-2.0

#include "stlmon/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stlmon {
namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

} // namespace

std::int64_t checked_gcd(std::int64_t a, std::int64_t b) {
    return narrow(gcd128(a, b));
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
        if (num_ == std::numeric_limits<std::int64_t>::min() || den_ == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("rational overflow");
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational p = parse(s.substr(0, slash));
        Rational q = parse(s.substr(slash + 1));
        if (!p.is_integer() || !q.is_integer()) return fail();
        if (q.num() == 0) throw std::domain_error("rational with zero denominator");
        return p / q;
    }

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    i128 mant = 0;
    int scale = 0;
    bool digits = false;
    bool dot = false;
    constexpr i128 limit = static_cast<i128>(1) << 100;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (dot) return fail();
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
            mant = mant * 10 + (c - '0');
            if (mant > limit) throw std::overflow_error("number too large: " + std::string(text));
            if (dot) --scale;
        } else {
            break;
        }
    }
    if (!digits) return fail();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') return fail();
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) return fail();
        int e = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
            e = e * 10 + (s[i] - '0');
            if (e > 60) throw std::overflow_error("exponent too large: " + std::string(text));
        }
        scale += eneg ? -e : e;
    }
    i128 num = neg ? -mant : mant;
    i128 den = 1;
    for (; scale > 0; --scale) {
        num *= 10;
        if (num > limit || num < -limit) throw std::overflow_error("number too large: " + std::string(text));
    }
    for (; scale < 0; ++scale) {
        den *= 10;
        if (den > limit) {
            // strip common factors of ten before giving up
            i128 g = gcd128(num, den);
            num /= g;
            den /= g;
            if (den > limit) throw std::overflow_error("number too precise: " + std::string(text));
        }
    }
    return make(num, den);
}

long double Rational::to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return to_string();
    int digits = std::max(twos, fives);
    i128 scaled = static_cast<i128>(num_);
    i128 factor = 1;
    for (int k = 0; k < digits; ++k) factor *= 10;
    scaled = scaled * (factor / den_);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string body;
    while (scaled > 0) {
        body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
    body.insert(body.end() - digits, '.');
    return (neg ? "-" : "") + body;
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace stlmon
