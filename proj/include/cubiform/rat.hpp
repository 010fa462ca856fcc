// Exact rational scalar type plus square/cube root and parsing helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubiform {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// Floor division, rounding toward -infinity for any sign combination.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

/// Exact integer square root; empty unless n is a perfect square.
inline std::optional<Int> isqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact integer cube root; defined for negative n as well.
inline std::optional<Int> icbrt_exact(const Int& n) {
    if (n == 0) return Int(0);
    const bool neg = n < 0;
    const Int m = neg ? Int(-n) : n;
    Int lo = 1, hi = Int(1) << (boost::multiprecision::msb(m) / 3 + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (mid * mid * mid <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (lo * lo * lo != m) return std::nullopt;
    return neg ? Int(-lo) : lo;
}

inline bool is_square(const Rat& r) {
    if (r < 0) return false;
    return isqrt_exact(num(r)).has_value() && isqrt_exact(den(r)).has_value();
}

/// Nonnegative exact square root of a rational, if one exists.
inline std::optional<Rat> sqrt_exact(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto n = isqrt_exact(num(r));
    auto d = isqrt_exact(den(r));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

/// Exact rational cube root, if one exists.
inline std::optional<Rat> cbrt_exact(const Rat& r) {
    auto n = icbrt_exact(num(r));
    auto d = icbrt_exact(den(r));
    if (!n || !d) return std::nullopt;
    return Rat(*n, *d);
}

/// Serializes as "p" for integers and "p/q" otherwise; parse_rat inverts this
/// exactly.
inline std::string to_string(const Rat& r) {
    std::string s = num(r).str();
    if (!is_integer(r)) {
        s += '/';
        s += den(r).str();
    }
    return s;
}

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline bool valid_signed_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}
}  // namespace detail

/// Parses "p" or "p/q" (q a positive integer literal). Throws
/// std::invalid_argument naming the offending token.
inline Rat parse_rat(std::string_view token) {
    const std::string_view t = detail::trim(token);
    const auto bad = [&] {
        throw std::invalid_argument("invalid rational token '" + std::string(token) + "'");
    };
    const std::size_t slash = t.find('/');
    if (slash == std::string_view::npos) {
        if (!detail::valid_signed_integer(t)) bad();
        return Rat(Int(std::string(t)));
    }
    const std::string_view ns = detail::trim(t.substr(0, slash));
    const std::string_view ds = detail::trim(t.substr(slash + 1));
    if (!detail::valid_signed_integer(ns) || !detail::valid_signed_integer(ds)) bad();
    if (!ds.empty() && (ds.front() == '+' || ds.front() == '-')) bad();
    Int n{std::string(ns)}, d{std::string(ds)};
    if (d == 0) bad();
    return Rat(n, d);
}

}  // namespace cubiform
