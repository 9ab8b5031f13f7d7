#pragma once

// Dense univariate polynomials, ascending coefficient order.
// The zero polynomial has an empty coefficient vector and degree -1.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "homcurve/scalar.hpp"

namespace homcurve {

template <class R>
class UnivariatePoly {
  public:
    UnivariatePoly() = default;

    explicit UnivariatePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly constant(const R& v) { return UnivariatePoly(std::vector<R>{v}); }

    static UnivariatePoly monomial(const R& v, int deg) {
        std::vector<R> c(static_cast<size_t>(deg) + 1, R(0));
        c.back() = v;
        return UnivariatePoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const std::vector<R>& coeffs() const { return c_; }

    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return R(0);
        return c_[static_cast<size_t>(i)];
    }

    const R& lead() const {
        if (c_.empty()) throw std::logic_error("lead of zero polynomial");
        return c_.back();
    }

    R operator()(const R& x) const {  // Horner
        R acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UnivariatePoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<int>(i));
        return UnivariatePoly(std::move(d));
    }

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return UnivariatePoly(std::move(c));
    }

    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return UnivariatePoly(std::move(c));
    }

    UnivariatePoly operator-() const {
        std::vector<R> c(c_);
        for (auto& v : c) v = -v;
        return UnivariatePoly(std::move(c));
    }

    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UnivariatePoly(std::move(c));
    }

    friend UnivariatePoly operator*(const UnivariatePoly& a, const R& s) {
        std::vector<R> c(a.c_);
        for (auto& v : c) v = v * s;
        return UnivariatePoly(std::move(c));
    }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }

  private:
    void trim() {
        while (!c_.empty() && homcurve::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

using RPoly = UnivariatePoly<Rational>;

/// Quotient and remainder over a field: a = q*b + r with deg r < deg b.
template <class R>
std::pair<UnivariatePoly<R>, UnivariatePoly<R>> divmod(const UnivariatePoly<R>& a, const UnivariatePoly<R>& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<R> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UnivariatePoly<R>{}, a};
    std::vector<R> quot(static_cast<size_t>(a.degree() - db) + 1, R(0));
    for (int i = a.degree(); i >= db; --i) {
        R f = rem[static_cast<size_t>(i)] / b.lead();
        if (homcurve::is_zero(f)) continue;
        quot[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - f * b.coeff(j);
    }
    return {UnivariatePoly<R>(std::move(quot)), UnivariatePoly<R>(std::move(rem))};
}

/// Strips the rational content; result has coprime integer coefficients
/// with positive leading coefficient.
inline UnivariatePoly<Rational> primitive_part(const UnivariatePoly<Rational>& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd);
    if (p.lead() < 0) scale = -scale;
    return p * scale;
}

/// Monic gcd over the rationals, with coefficient growth tamed by
/// re-normalizing to primitive integer form each step.
inline UnivariatePoly<Rational> poly_gcd(UnivariatePoly<Rational> a, UnivariatePoly<Rational> b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = primitive_part(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.lead());
}

/// Cauchy root bound: all real roots lie in (-B, B).
inline Rational cauchy_root_bound(const UnivariatePoly<Rational>& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, rational_abs(p.coeff(i) / p.lead()));
    return m + 1;
}

}  // namespace homcurve
