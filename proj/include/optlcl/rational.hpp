#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace optlcl {

// Exact rational arithmetic on 64-bit numerator/denominator.
// Invariants: den > 0, gcd(|num|, den) == 1. Intermediate products are
// computed in 128 bits and narrowed with a range check; the value ranges
// this library produces (small window costs, aggregates over <= 1e6-node
// cycles) stay far below the check.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }
};

namespace detail {
inline long long narrow128(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(x);
}
}  // namespace detail

inline Rational rat_make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num = detail::narrow128(n);
    r.den = detail::narrow128(d);
    if (r.num == 0) r.den = 1;
    return r;
}

inline Rational operator+(const Rational& a, const Rational& b) {
    return rat_make((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
}
inline Rational operator-(const Rational& a, const Rational& b) {
    return rat_make((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
}
inline Rational operator*(const Rational& a, const Rational& b) {
    return rat_make((__int128)a.num * b.num, (__int128)a.den * b.den);
}
inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return rat_make((__int128)a.num * b.den, (__int128)a.den * b.num);
}
inline Rational operator-(const Rational& a) { Rational r; r.num = -a.num; r.den = a.den; return r; }

inline bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

// Accepts integers ("3", "-1"), fractions ("3/2"), and decimal literals
// ("0.25", kept exact). Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto is_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (body[0] == '-' || body[0] == '+') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    auto slash = body.find('/');
    auto dot = body.find('.');
    try {
        if (slash != std::string::npos) {
            std::string p = body.substr(0, slash), q = body.substr(slash + 1);
            if (!is_digits(p) || !is_digits(q)) return std::nullopt;
            long long pn = std::stoll(p), qn = std::stoll(q);
            if (qn == 0) return std::nullopt;
            return rat_make(neg ? -pn : pn, qn);
        }
        if (dot != std::string::npos) {
            std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
            if (ip.empty()) ip = "0";
            if (!is_digits(ip) || !is_digits(fp) || fp.size() > 15) return std::nullopt;
            long long scale = 1;
            for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
            long long whole = std::stoll(ip), frac = fp.empty() ? 0 : std::stoll(fp);
            __int128 n = (__int128)whole * scale + frac;
            return rat_make(neg ? -n : n, scale);
        }
        if (!is_digits(body)) return std::nullopt;
        long long v = std::stoll(body);
        return Rational(neg ? -v : v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// A window/walk cost: either a finite non-negative rational or bot
// (forbidden configuration). nullopt encodes bot.
using CostValue = std::optional<Rational>;

inline std::string to_string(const CostValue& c) { return c ? to_string(*c) : "bot"; }

}  // namespace optlcl
