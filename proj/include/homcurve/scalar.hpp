#pragma once

// Arithmetic backends for binary forms: exact rationals (default) and
// plain doubles. A form lives entirely in one backend.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace homcurve {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }
inline int sign(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline bool is_finite_value(const Rational&) { return true; }
inline bool is_finite_value(double x) { return std::isfinite(x); }

// Implemented in quadratic_field.hpp; declared here so that templates over a
// generic scalar see the full overload set at their point of definition.
struct QuadExt;
bool is_zero(const QuadExt&);
int sign(const QuadExt&);
double to_double(const QuadExt&);
bool is_finite_value(const QuadExt&);

template <class R>
R scalar_pow(const R& base, unsigned e) {
    R acc(1);
    R b = base;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * b;
        if (e > 1) b = b * b;
    }
    return acc;
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Floor of the integer n-th root of a non-negative integer.
inline Integer integer_nth_root_floor(const Integer& a, unsigned n) {
    if (a < 0) throw std::invalid_argument("integer_nth_root_floor: negative argument");
    if (a == 0 || n == 1) return a;
    Integer lo = 0, hi = Integer(1) << (msb(a) / n + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (pow(mid, n) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

/// Exact rational n-th root, when it exists. For even n the argument must be
/// non-negative and the positive root is returned.
inline std::optional<Rational> rational_nth_root(const Rational& q, unsigned n) {
    if (n == 0) throw std::invalid_argument("rational_nth_root: n = 0");
    if (q == 0) return Rational(0);
    bool neg = q < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Integer num = numerator(rational_abs(q)), den = denominator(rational_abs(q));
    Integer rn = integer_nth_root_floor(num, n);
    Integer rd = integer_nth_root_floor(den, n);
    if (pow(rn, n) != num || pow(rd, n) != den) return std::nullopt;
    Rational root(rn, rd);
    return neg ? Rational(-root) : root;
}

/// Rational approximation of |q|^(1/n) with |error| < tol, by bisection.
inline Rational rational_nth_root_approx(const Rational& q, unsigned n, const Rational& tol) {
    Rational a = rational_abs(q);
    if (a == 0) return Rational(0);
    if (auto exact = rational_nth_root(a, n)) return *exact;
    Rational lo = 0, hi = a < 1 ? Rational(1) : a;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (scalar_pow(mid, n) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace homcurve
