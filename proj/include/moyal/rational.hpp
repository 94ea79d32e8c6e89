#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace moyal {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always reduced, denominator > 0, zero is 0/1;
// cpp_rational maintains all three invariants.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_int: zero to negative power");
        return Rational(1) / pow_int(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Rational(r);
}

inline std::optional<BigInt> int_nth_root(const BigInt& v, unsigned n) {
    if (v < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = int_nth_root(-v, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (v == 0 || v == 1 || n == 1) return v;
    BigInt lo = 0, hi = v;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned i = 0; i < n; ++i) {
            p *= mid;
            if (p > v) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    BigInt p = 1;
    for (unsigned i = 0; i < n; ++i) p *= lo;
    if (p == v) return lo;
    return std::nullopt;
}

// Exact n-th root of a rational, when one exists.
inline std::optional<Rational> rational_root(const Rational& v, unsigned n) {
    auto rn = int_nth_root(numerator(v), n);
    auto rd = int_nth_root(denominator(v), n);
    if (!rn || !rd) return std::nullopt;
    return Rational(*rn, *rd);
}

} // namespace moyal
