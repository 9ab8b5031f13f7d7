#pragma once

// Centro-affine geometry of the level curve {h = 1}: fundamental form,
// arc-length quadrature, boundary behaviour of the cone over a component, and
// the tangent-line/cone intersection.

#include <cmath>
#include <limits>
#include <optional>

#include "homcurve/classify.hpp"
#include "homcurve/hyperbolicity.hpp"
#include "homcurve/symmetry.hpp"

namespace homcurve {

/// Spanning vector of ker(dh_p), the gradient rotated 90 degrees
/// counterclockwise: v = (-dh/dy, dh/dx)(p). Rejects critical points.
template <class R>
Point2<R> tangent_vector(const BinaryForm<R>& h, const Point2<R>& p) {
    auto g = gradient_at(h, p);
    if (is_zero(g.x) && is_zero(g.y)) throw std::invalid_argument("tangent_vector: critical point");
    return {-g.y, g.x};
}

/// g(v, v) = -(1/tau) d2h_p(v, v), the centro-affine fundamental form.
/// v must span ker(dh_p); positive at hyperbolic points.
template <class R>
R fundamental_form(const BinaryForm<R>& h, const Point2<R>& p, const Point2<R>& v) {
    if (is_zero(v.x) && is_zero(v.y)) throw std::invalid_argument("fundamental_form: zero tangent vector");
    auto g = gradient_at(h, p);
    R pairing = g.x * v.x + g.y * v.y;
    if constexpr (std::is_same_v<R, double>) {
        double scale = std::sqrt((g.x * g.x + g.y * g.y) * (v.x * v.x + v.y * v.y));
        if (std::abs(pairing) > 1e-9 * (scale > 0 ? scale : 1.0))
            throw std::invalid_argument("fundamental_form: v is not tangent");
    } else {
        if (!is_zero(pairing)) throw std::invalid_argument("fundamental_form: v is not tangent");
    }
    return -hessian_bilinear(h, p, v, v) / R(h.degree());
}

namespace detail {

struct AngleIntegrand {
    // curve c(theta) = rho(theta) u(theta) on {h = 1}, u = (cos, sin),
    // rho = h(u)^(-1/tau); integrand is sqrt(g(c', c')).
    BinaryForm<double> h;
    BinaryForm<double> hx, hy;
    std::array<BinaryForm<double>, 4> H;
    int tau;

    explicit AngleIntegrand(const BinaryForm<Rational>& hr)
        : h(hr.degree(),
            [&] {
                std::vector<double> c;
                for (const auto& v : hr.coeffs()) c.push_back(to_double(v));
                return c;
            }()),
          hx(partial(h, Var::X)),
          hy(partial(h, Var::Y)),
          H(hessian(h)),
          tau(h.degree()) {}

    double operator()(double theta) const {
        double ux = std::cos(theta), uy = std::sin(theta);
        double hu = h(ux, uy);
        if (!(hu > 0)) throw std::domain_error("arc_length: path leaves the positive arc");
        double rho = std::pow(hu, -1.0 / tau);
        // u' and rho' = -(1/tau) h(u)^(-1/tau - 1) dh(u) . u'
        double upx = -uy, upy = ux;
        double dh_up = hx(ux, uy) * upx + hy(ux, uy) * upy;
        double rhop = -(1.0 / tau) * std::pow(hu, -1.0 / tau - 1.0) * dh_up;
        double cx = rhop * ux + rho * upx, cy = rhop * uy + rho * upy;
        // d2h at c = rho^(tau-2) d2h at u, by homogeneity
        double hess = H[0](ux, uy) * cx * cx + 2 * H[1](ux, uy) * cx * cy + H[3](ux, uy) * cy * cy;
        double g = -std::pow(rho, tau - 2) * hess / tau;
        return std::sqrt(std::max(g, 0.0));
    }
};

inline double adaptive_simpson(const AngleIntegrand& f, double a, double b, double fa, double fm, double fb,
                               double whole, double tol, int depth) {
    double m = (a + b) / 2;
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

inline double integrate(const AngleIntegrand& f, double a, double b, double rel_tol) {
    if (a == b) return 0;
    double m = (a + b) / 2;
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    double tol = rel_tol * std::max(std::abs(whole), 1e-3);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace detail

/// Centro-affine length of the component's curve between the rays through two
/// interior directions of its arc, by adaptive quadrature in the direction
/// angle to relative tolerance rel_tol.
inline double arc_length(const BinaryForm<Rational>& h, const ComponentDescriptor& component,
                         const Point2<Rational>& d1, const Point2<Rational>& d2, double rel_tol = 1e-8) {
    if (!direction_in_open_arc(component, d1, h) || !direction_in_open_arc(component, d2, h))
        throw std::invalid_argument("arc_length: directions must be interior to the component's arc");
    double th1 = std::atan2(to_double(d1.y), to_double(d1.x));
    double th2 = std::atan2(to_double(d2.y), to_double(d2.x));
    if (th1 == th2) return 0;
    detail::AngleIntegrand f(h);
    // two circular sweeps join the angles; take the one inside the arc
    double delta = th2 - th1;
    while (delta > M_PI) delta -= 2 * M_PI;
    while (delta < -M_PI) delta += 2 * M_PI;
    for (double cand : {delta, delta - (delta > 0 ? 2 * M_PI : -2 * M_PI)}) {
        bool inside = true;
        for (int i = 0; i <= 128 && inside; ++i) {
            double th = th1 + cand * i / 128;
            if (!(f.h(std::cos(th), std::sin(th)) > 0)) inside = false;
        }
        if (inside) return std::abs(detail::integrate(f, th1, th1 + cand, rel_tol));
    }
    throw std::invalid_argument("arc_length: directions are not joined inside the arc");
}

enum class BoundaryLabel { Regular, SingularAtInfinity };

struct BoundaryRay {
    ProjectiveDirection direction;
    bool gradient_vanishes = false;  // dh = 0 identically on the ray (condition (i) fails there)
    // Condition (ii) of the regularity definition restricted to the ray span
    // is -d2h_p(p,p) = -tau(tau-1) h(p) = 0 by Euler's identity, hence always
    // positive semidefinite with one-dimensional kernel.
    bool condition_ii_psd = true;
};

struct BoundaryBehaviour {
    BoundaryLabel label = BoundaryLabel::Regular;
    std::vector<BoundaryRay> rays;               // empty for full-circle components
    std::vector<ProjectiveDirection> witnesses;  // rays with identically vanishing gradient
};

namespace detail {

/// Symbolic test: both partials vanish on the whole ray through the direction.
inline bool gradient_vanishes_on_ray(const BinaryForm<Rational>& h, const ProjectiveDirection& d) {
    auto hx = partial(h, Var::X), hy = partial(h, Var::Y);
    if (d.kind == ProjectiveDirection::Kind::AxisPoint) {
        // dh(0, s) = s^(tau-1) dh(0, 1) by homogeneity
        return is_zero(hx.coeff(hx.degree())) && is_zero(hy.coeff(hy.degree()));
    }
    RPoly px = dehomogenize(hx, Chart::X), py = dehomogenize(hy, Chart::X);
    if (d.parameter.is_exact()) {
        const Rational& t = *d.parameter.exact_point;
        return sign(px(t)) == 0 && sign(py(t)) == 0;
    }
    if (!d.defining_poly) throw std::logic_error("gradient_vanishes_on_ray: direction without witness polynomial");
    if (px.is_zero() && py.is_zero()) return true;
    RPoly g = px.is_zero() ? py : (py.is_zero() ? px : poly_gcd(px, py));
    g = poly_gcd(g, *d.defining_poly);
    if (g.degree() < 1) return false;
    RootInterval iv = d.parameter;
    for (int guard = 0; guard < 512; ++guard) {
        auto res = sturm_count(square_free_part(g), iv.lo, iv.hi);
        if (!res.endpoint_is_root) return res.count > 0;
        refine_root_interval(*d.defining_poly, iv);
        if (iv.is_exact()) return sign(g(*iv.exact_point)) == 0;
    }
    throw std::logic_error("gradient_vanishes_on_ray: interval refinement did not separate");
}

}  // namespace detail

/// Regularity of the cone over the component at its two boundary rays:
/// singular at infinity iff dh vanishes identically on one of them.
inline BoundaryBehaviour boundary_behavior(const BinaryForm<Rational>& h, const ComponentDescriptor& component) {
    BoundaryBehaviour out;
    if (component.arc.full_circle) return out;
    for (const auto& d : {component.arc.start, component.arc.end}) {
        BoundaryRay ray{d, detail::gradient_vanishes_on_ray(h, d)};
        if (ray.gradient_vanishes) out.witnesses.push_back(d);
        out.rays.push_back(std::move(ray));
    }
    out.label = out.witnesses.empty() ? BoundaryLabel::Regular : BoundaryLabel::SingularAtInfinity;
    return out;
}

struct ConeInterval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    std::optional<Rational> lo_exact, hi_exact;  // set when the boundary data is rational
    Point2<Rational> basepoint;
    Point2<Rational> direction;  // tangent vector at the basepoint

    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

namespace detail {

// p + t v = s b with s > 0: returns t, or nullopt when the tangent line
// misses the open ray through b.
inline std::optional<double> ray_hit(const Point2<double>& p, const Point2<double>& v, const Point2<double>& b) {
    double D = b.x * v.y - b.y * v.x;
    if (D == 0) return std::nullopt;
    double t = (p.x * b.y - p.y * b.x) / D;
    double s = (p.x * v.y - p.y * v.x) / D;
    if (!(s > 0)) return std::nullopt;
    return t;
}

inline std::optional<Rational> ray_hit_exact(const Point2<Rational>& p, const Point2<Rational>& v,
                                             const Point2<Rational>& b) {
    Rational D = b.x * v.y - b.y * v.x;
    if (is_zero(D)) return std::nullopt;
    Rational t = (p.x * b.y - p.y * b.x) / D;
    Rational s = (p.x * v.y - p.y * v.x) / D;
    if (!(sign(s) > 0)) return std::nullopt;
    return t;
}

inline Point2<double> boundary_ray_double(const ProjectiveDirection& d) {
    auto u = d.unit();
    return {u[0], u[1]};
}

inline std::optional<Point2<Rational>> boundary_ray_exact(const ProjectiveDirection& d) {
    if (d.kind == ProjectiveDirection::Kind::AxisPoint) return Point2<Rational>{Rational(0), Rational(d.sign_lift)};
    if (!d.parameter.is_exact()) return std::nullopt;
    return Point2<Rational>{Rational(d.sign_lift), Rational(d.sign_lift) * *d.parameter.exact_point};
}

}  // namespace detail

/// Intersection of the tangent line p + t v with the open cone over the
/// component's arc: the parameter interval (lo, hi) around t = 0. Bounded on
/// both sides exactly when both boundary rays are hit.
inline ConeInterval tangent_cone_intersection(const BinaryForm<Rational>& h, const ComponentDescriptor& component,
                                              const Point2<Rational>& p) {
    if (!direction_in_open_arc(component, p, h))
        throw std::invalid_argument("tangent_cone_intersection: basepoint is not in the component's cone");
    ConeInterval out;
    out.basepoint = p;
    out.direction = tangent_vector(h, p);
    if (component.arc.full_circle) return out;

    Point2<double> pd{to_double(p.x), to_double(p.y)};
    Point2<double> vd{to_double(out.direction.x), to_double(out.direction.y)};
    for (const auto& d : {component.arc.start, component.arc.end}) {
        // tighten algebraic endpoints so the double ray is accurate
        ProjectiveDirection dir = d;
        if (dir.kind == ProjectiveDirection::Kind::XChart && !dir.parameter.is_exact() && dir.defining_poly) {
            Rational w = Rational(1, Integer(1) << 80);
            refine_until_width(*dir.defining_poly, dir.parameter, w);
        }
        auto t = detail::ray_hit(pd, vd, detail::boundary_ray_double(dir));
        if (!t) continue;
        if (*t < 0)
            out.lo = std::max(out.lo, *t);
        else if (*t > 0)
            out.hi = std::min(out.hi, *t);
        if (auto b = detail::boundary_ray_exact(d)) {
            auto te = detail::ray_hit_exact(p, out.direction, *b);
            if (te && sign(*te) < 0 && (!out.lo_exact || *te > *out.lo_exact)) out.lo_exact = te;
            if (te && sign(*te) > 0 && (!out.hi_exact || *te < *out.hi_exact)) out.hi_exact = te;
        }
    }
    return out;
}

}  // namespace homcurve
