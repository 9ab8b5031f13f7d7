#pragma once

// Homogeneous polynomials in two variables and the GL(2) action on them.
// h = sum_{k=0}^{tau} f_k x^(tau-k) y^k, stored as the dense vector (f_0..f_tau).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcurve/scalar.hpp"
#include "homcurve/univariate.hpp"

namespace homcurve {

template <class R>
struct Point2 {
    R x, y;
};

template <class R>
class BinaryForm {
  public:
    /// coeffs[k] multiplies x^(degree-k) y^k.
    BinaryForm(int degree, std::vector<R> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (deg_ < 0 || c_.size() != static_cast<size_t>(deg_) + 1)
            throw std::invalid_argument("BinaryForm: coefficient vector must have degree+1 entries");
    }

    static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<R>(static_cast<size_t>(degree) + 1, R(0))); }

    /// x^(tau-k) y^k
    static BinaryForm monomial(int tau, int k) {
        auto h = zero(tau);
        h.c_[static_cast<size_t>(k)] = R(1);
        return h;
    }

    int degree() const { return deg_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    R& coeff(int k) { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!homcurve::is_zero(v)) return false;
        return true;
    }

    R operator()(const R& x, const R& y) const {
        // Horner in y/x would divide; use power tables instead, exact in any backend.
        std::vector<R> xp(c_.size(), R(1)), yp(c_.size(), R(1));
        for (size_t i = 1; i < c_.size(); ++i) {
            xp[i] = xp[i - 1] * x;
            yp[i] = yp[i - 1] * y;
        }
        R acc(0);
        for (int k = 0; k <= deg_; ++k)
            acc = acc + c_[static_cast<size_t>(k)] * xp[static_cast<size_t>(deg_ - k)] * yp[static_cast<size_t>(k)];
        return acc;
    }

    R operator()(const Point2<R>& p) const { return (*this)(p.x, p.y); }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.deg_ != b.deg_) throw std::invalid_argument("BinaryForm sum: degree mismatch");
        auto c = a.c_;
        for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.c_[i];
        return BinaryForm(a.deg_, std::move(c));
    }

    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.deg_ != b.deg_) throw std::invalid_argument("BinaryForm difference: degree mismatch");
        auto c = a.c_;
        for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b.c_[i];
        return BinaryForm(a.deg_, std::move(c));
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<R> c(static_cast<size_t>(a.deg_ + b.deg_) + 1, R(0));
        for (int i = 0; i <= a.deg_; ++i)
            for (int j = 0; j <= b.deg_; ++j)
                c[static_cast<size_t>(i + j)] =
                    c[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        return BinaryForm(a.deg_ + b.deg_, std::move(c));
    }

    friend BinaryForm operator*(const BinaryForm& a, const R& s) {
        auto c = a.c_;
        for (auto& v : c) v = v * s;
        return BinaryForm(a.deg_, std::move(c));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.deg_ == b.deg_ && a.c_ == b.c_; }

  private:
    int deg_;
    std::vector<R> c_;
};

enum class Var { X, Y };
enum class Chart { X, Y };

template <class R>
BinaryForm<R> partial(const BinaryForm<R>& h, Var v) {
    int tau = h.degree();
    if (tau < 1) throw std::invalid_argument("partial: degree must be >= 1");
    auto d = BinaryForm<R>::zero(tau - 1);
    for (int k = 0; k <= tau; ++k) {
        if (v == Var::X && k < tau) d.coeff(k) = h.coeff(k) * R(tau - k);
        if (v == Var::Y && k > 0) d.coeff(k - 1) = h.coeff(k) * R(k);
    }
    return d;
}

/// Second partials, row-major: [hxx, hxy, hyx, hyy]. Symmetric.
template <class R>
std::array<BinaryForm<R>, 4> hessian(const BinaryForm<R>& h) {
    if (h.degree() < 2) throw std::invalid_argument("hessian: degree must be >= 2");
    auto hx = partial(h, Var::X), hy = partial(h, Var::Y);
    auto hxy = partial(hx, Var::Y);
    return {partial(hx, Var::X), hxy, hxy, partial(hy, Var::Y)};
}

/// det of the Hessian matrix, a form of degree 2(tau-2).
template <class R>
BinaryForm<R> hessian_det(const BinaryForm<R>& h) {
    auto H = hessian(h);
    return H[0] * H[3] - H[1] * H[2];
}

template <class R>
struct LinearMap {
    R a11, a12, a21, a22;

    static LinearMap identity() { return {R(1), R(0), R(0), R(1)}; }
    static LinearMap diagonal(const R& l, const R& m) { return {l, R(0), R(0), m}; }
    static LinearMap swap_xy() { return {R(0), R(1), R(1), R(0)}; }

    R det() const { return a11 * a22 - a12 * a21; }
    bool invertible() const { return !homcurve::is_zero(det()); }

    LinearMap inverse() const {
        R d = det();
        if (homcurve::is_zero(d)) throw std::invalid_argument("LinearMap: singular");
        return {a22 / d, -a12 / d, -a21 / d, a11 / d};
    }

    Point2<R> apply(const Point2<R>& p) const { return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y}; }

    friend LinearMap operator*(const LinearMap& A, const LinearMap& B) {  // matrix product
        return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
    }

    friend bool operator==(const LinearMap& A, const LinearMap& B) = default;
};

/// (A*h)(v) = h(Av). Rejects singular maps.
template <class R>
BinaryForm<R> pullback(const BinaryForm<R>& h, const LinearMap<R>& A) {
    if (!A.invertible()) throw std::invalid_argument("pullback: singular linear map");
    int tau = h.degree();
    // Rows of A give the two linear forms substituted for x and y.
    BinaryForm<R> l1(1, {A.a11, A.a12});
    BinaryForm<R> l2(1, {A.a21, A.a22});
    // Power tables l1^i, l2^j.
    std::vector<BinaryForm<R>> p1, p2;
    p1.reserve(static_cast<size_t>(tau) + 1);
    p2.reserve(static_cast<size_t>(tau) + 1);
    p1.push_back(BinaryForm<R>(0, {R(1)}));
    p2.push_back(BinaryForm<R>(0, {R(1)}));
    for (int i = 1; i <= tau; ++i) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    auto out = BinaryForm<R>::zero(tau);
    for (int k = 0; k <= tau; ++k) {
        if (homcurve::is_zero(h.coeff(k))) continue;
        out = out + p1[static_cast<size_t>(tau - k)] * p2[static_cast<size_t>(k)] * h.coeff(k);
    }
    return out;
}

/// X-chart: p(t) = h(1, t); Y-chart: q(s) = h(s, 1).
/// In the X-chart the dropped line is {x=0}; its multiplicity is
/// tau - deg p (the count of vanishing top coefficients).
template <class R>
UnivariatePoly<R> dehomogenize(const BinaryForm<R>& h, Chart chart) {
    std::vector<R> c(h.coeffs());
    if (chart == Chart::Y) std::reverse(c.begin(), c.end());
    return UnivariatePoly<R>(std::move(c));
}

/// Inverse of dehomogenize in the X-chart: x^(tau - deg p) * p(y/x) homogenized.
template <class R>
BinaryForm<R> homogenize_x(const UnivariatePoly<R>& p, int tau) {
    if (p.degree() > tau) throw std::invalid_argument("homogenize_x: degree exceeds tau");
    auto h = BinaryForm<R>::zero(tau);
    for (int k = 0; k <= p.degree(); ++k) h.coeff(k) = p.coeff(k);
    return h;
}

/// dh_p as a pair (dh/dx, dh/dy) evaluated at p.
template <class R>
Point2<R> gradient_at(const BinaryForm<R>& h, const Point2<R>& p) {
    return {partial(h, Var::X)(p), partial(h, Var::Y)(p)};
}

/// The bilinear value (d^2 h)_p(u, v).
template <class R>
R hessian_bilinear(const BinaryForm<R>& h, const Point2<R>& p, const Point2<R>& u, const Point2<R>& v) {
    auto H = hessian(h);
    return H[0](p) * u.x * v.x + H[1](p) * (u.x * v.y + u.y * v.x) + H[3](p) * u.y * v.y;
}

}  // namespace homcurve
