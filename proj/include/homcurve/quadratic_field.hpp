#pragma once

// Exact arithmetic in a real quadratic extension Q(sqrt(d)). Values carry
// their radicand; purely rational values use radicand 0 and mix freely with
// values of any radicand.

#include <stdexcept>

#include "homcurve/scalar.hpp"

namespace homcurve {

struct QuadExt {
    Rational a{0}, b{0};  // a + b sqrt(d)
    Integer d{0};         // radicand, > 0 whenever b != 0

    QuadExt() = default;
    QuadExt(int v) : a(v) {}
    QuadExt(const Rational& v) : a(v) {}
    QuadExt(Rational ra, Rational rb, Integer rd) : a(std::move(ra)), b(std::move(rb)), d(std::move(rd)) {
        if (b == 0)
            d = 0;
        else if (d <= 0)
            throw std::invalid_argument("QuadExt: radicand must be positive");
    }

    bool is_rational() const { return b == 0; }

    friend QuadExt operator-(const QuadExt& x) { return {-x.a, -x.b, x.d}; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }
};

inline QuadExt conjugate(const QuadExt& x) { return {x.a, -x.b, x.d}; }

namespace detail {

inline Integer quad_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b == 0) return y.d;
    if (y.b == 0) return x.d;
    if (x.d != y.d) throw std::invalid_argument("QuadExt: mixed radicands");
    return x.d;
}

}  // namespace detail

inline QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return {x.a + y.a, x.b + y.b, detail::quad_radicand(x, y)};
}

inline QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

inline QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Integer d = detail::quad_radicand(x, y);
    return {x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a, d};
}

inline bool is_zero(const QuadExt& x) { return x.a == 0 && x.b == 0; }

inline QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (is_zero(y)) throw std::invalid_argument("QuadExt: division by zero");
    if (y.b == 0) return {x.a / y.a, x.b / y.a, x.d};
    // multiply by the conjugate; the norm a^2 - b^2 d is nonzero for d not a
    // perfect square, and still nonzero here because y != 0 was checked after
    // reduction of rational values to b = 0
    Rational norm = y.a * y.a - y.b * y.b * Rational(y.d);
    if (norm == 0) throw std::invalid_argument("QuadExt: radicand is a perfect square");
    return x * QuadExt{y.a / norm, -y.b / norm, y.d};
}

inline int sign(const QuadExt& x) {
    if (x.b == 0) return sign(x.a);
    if (x.a == 0) return sign(x.b);
    int sa = sign(x.a), sb = sign(x.b);
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rational lhs = x.a * x.a, rhs = x.b * x.b * Rational(x.d);
    if (lhs == rhs) return 0;  // only when d is a perfect square
    return lhs > rhs ? sa : sb;
}

inline double to_double(const QuadExt& x) {
    return to_double(x.a) + to_double(x.b) * std::sqrt(x.d.convert_to<double>());
}

inline bool is_finite_value(const QuadExt&) { return true; }

/// sqrt of a positive rational as an element of Q(sqrt(num*den)).
inline QuadExt quad_sqrt(const Rational& q) {
    if (q < 0) throw std::invalid_argument("quad_sqrt: negative argument");
    if (auto r = rational_nth_root(q, 2)) return QuadExt(*r);
    Integer n = numerator(q), d = denominator(q);
    // sqrt(n/d) = sqrt(n d) / d
    return {Rational(0), Rational(1, d), n * d};
}

}  // namespace homcurve
