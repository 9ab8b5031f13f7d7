#include <cmath>
#include <random>

#include "doctest.h"
#include "homcurve/centroaffine.hpp"

using namespace homcurve;

namespace {

using BF = BinaryForm<Rational>;

const BF x2y = BF::monomial(3, 1);
const BF x2y2 = BF::monomial(4, 2);
const BF quart(4, {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});
const BF h1(4, {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1, 4)});
const BF cubic_fan(3, {Rational(1), Rational(0), Rational(-3), Rational(0)});

const ComponentDescriptor& component_containing(const std::vector<ComponentDescriptor>& comps,
                                                const Point2<Rational>& d, const BF& h) {
    for (const auto& c : comps)
        if (direction_in_open_arc(c, d, h)) return c;
    throw std::logic_error("no component contains the direction");
}

}  // namespace

TEST_CASE("tangent_vector fixtures and defining property") {
    auto v = tangent_vector(x2y, Point2<Rational>{1, 1});
    CHECK(v.x == -1);
    CHECK(v.y == 2);
    v = tangent_vector(x2y2, Point2<Rational>{1, 1});
    CHECK(v.x == -2);
    CHECK(v.y == 2);
    CHECK_THROWS(tangent_vector(x2y, Point2<Rational>{0, 1}));  // dh = (0, 0) there

    std::mt19937 rng(83);
    std::uniform_int_distribution<int> coeff(-4, 4), pt(-5, 5);
    for (int i = 0; i < 100; ++i) {
        int tau = 3 + i % 6;
        std::vector<Rational> c(size_t(tau) + 1);
        for (auto& x : c) x = coeff(rng);
        BF h(tau, std::move(c));
        Point2<Rational> p{pt(rng), pt(rng)};
        if (h.is_zero()) continue;
        auto g = gradient_at(h, p);
        if (is_zero(g.x) && is_zero(g.y)) continue;
        auto t = tangent_vector(h, p);
        CHECK(g.x * t.x + g.y * t.y == 0);
    }
}

TEST_CASE("fundamental_form fixtures") {
    CHECK(fundamental_form(x2y, Point2<Rational>{1, 1}, Point2<Rational>{-1, 2}) == 2);
    // bilinearity under scaling
    CHECK(fundamental_form(x2y, Point2<Rational>{1, 1}, Point2<Rational>{-2, 4}) == 8);
    Rational g22 = fundamental_form(x2y2, Point2<Rational>{1, 1}, Point2<Rational>{-1, 1});
    CHECK(sign(g22) > 0);
    CHECK_THROWS(fundamental_form(x2y, Point2<Rational>{1, 1}, Point2<Rational>{1, 1}));  // not tangent
    CHECK_THROWS(fundamental_form(x2y, Point2<Rational>{1, 1}, Point2<Rational>{0, 0}));

    // double backend with tolerance
    BinaryForm<double> hd(3, {0, 1, 0, 0});
    CHECK(fundamental_form(hd, Point2<double>{1, 1}, Point2<double>{-1, 2}) == doctest::Approx(2.0));
    CHECK_THROWS(fundamental_form(hd, Point2<double>{1, 1}, Point2<double>{1, 0}));
}

TEST_CASE("fundamental_form positive at hyperbolic points of enumerated forms") {
    std::mt19937 rng(89);
    std::uniform_int_distribution<int> num(1, 40);
    for (int tau = 3; tau <= 12; ++tau)
        for (int k = 1; k <= tau / 2; ++k) {
            BF h = BF::monomial(tau, k);
            for (int i = 0; i < 100; ++i) {
                // the open first quadrant is hyperbolic for every monomial
                Point2<Rational> p{Rational(num(rng), num(rng)), Rational(num(rng), num(rng))};
                CHECK(sign(fundamental_form(h, p, tangent_vector(h, p))) > 0);
            }
        }
}

TEST_CASE("hessian_bilinear matches finite differences along the tangent") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coeff(-3, 3), pt(1, 6);
    int checked = 0;
    for (int i = 0; i < 60 || checked < 20; ++i) {
        int tau = 3 + i % 5;
        std::vector<Rational> c(size_t(tau) + 1);
        for (auto& x : c) x = coeff(rng);
        BF h(tau, std::move(c));
        if (h.is_zero()) continue;
        Point2<Rational> p{pt(rng), pt(rng)};
        auto g = gradient_at(h, p);
        if (is_zero(g.x) && is_zero(g.y)) continue;
        auto v = tangent_vector(h, p);
        double exact = to_double(hessian_bilinear(h, p, v, v));
        BinaryForm<double> hd(tau, [&] {
            std::vector<double> d;
            for (const auto& x : h.coeffs()) d.push_back(to_double(x));
            return d;
        }());
        double s = 1e-4;
        double px = to_double(p.x), py = to_double(p.y), vx = to_double(v.x), vy = to_double(v.y);
        double fd = (hd(px + s * vx, py + s * vy) - 2 * hd(px, py) + hd(px - s * vx, py - s * vy)) / (s * s);
        double scale = std::max(1.0, std::abs(exact));
        CHECK(std::abs(fd - exact) <= 1e-5 * scale * (1 + vx * vx + vy * vy));
        ++checked;
        if (i > 500) break;
    }
    CHECK(checked >= 20);
}

TEST_CASE("Euler degeneracy on boundary directions") {
    for (int tau = 3; tau <= 12; ++tau)
        for (int k = 1; k <= tau / 2; ++k) {
            BF h = BF::monomial(tau, k);
            for (auto u : {Point2<Rational>{1, 0}, Point2<Rational>{0, 1}, Point2<Rational>{-1, 0}}) {
                CHECK(sign(h(u)) == 0);
                CHECK(hessian_bilinear(h, u, u, u) == 0);
            }
        }
}

TEST_CASE("arc_length basics and additivity") {
    auto comps = components(x2y);
    const auto& c = component_containing(comps, Point2<Rational>{1, 1}, x2y);
    CHECK(arc_length(x2y, c, Point2<Rational>{1, 1}, Point2<Rational>{1, 1}) == 0);
    double l13 = arc_length(x2y, c, Point2<Rational>{1, 3}, Point2<Rational>{3, 1});
    double l12 = arc_length(x2y, c, Point2<Rational>{1, 3}, Point2<Rational>{1, 1});
    double l23 = arc_length(x2y, c, Point2<Rational>{1, 1}, Point2<Rational>{3, 1});
    CHECK(l13 == doctest::Approx(l12 + l23).epsilon(1e-6));
    CHECK(l13 > 0);
    // symmetric in the direction order
    CHECK(arc_length(x2y, c, Point2<Rational>{3, 1}, Point2<Rational>{1, 3}) == doctest::Approx(l13).epsilon(1e-9));
    // directions outside the arc are rejected
    CHECK_THROWS(arc_length(x2y, c, Point2<Rational>{1, 1}, Point2<Rational>{-1, 1}));
}

TEST_CASE("arc_length isometry under the generator flow") {
    // E = diag(r, r^-2) is exp(t diag(1,-2)) at t = ln r and maps the curve
    // {x^2 y = 1} to itself; the centro-affine speed of the flow is sqrt(2),
    // so the length between p and E p is sqrt(2) ln r independently of p.
    auto comps = components(x2y);
    const auto& c = component_containing(comps, Point2<Rational>{1, 1}, x2y);
    std::vector<Rational> rs = {Rational(2), Rational(3, 2), Rational(5, 4), Rational(7, 3), Rational(9, 8)};
    for (const auto& r : rs) {
        double expected = std::sqrt(2.0) * std::log(to_double(r));
        for (auto d : {Point2<Rational>{1, 1}, Point2<Rational>{2, 5}}) {
            Point2<Rational> ed{d.x * r, d.y / (r * r)};
            double len = arc_length(x2y, c, d, ed);
            CHECK(len == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("boundary_behavior fixtures") {
    // x^2 y, first-quadrant component: singular at infinity with witness (0,1)
    auto comps = components(x2y);
    const auto& c = component_containing(comps, Point2<Rational>{1, 1}, x2y);
    auto bb = boundary_behavior(x2y, c);
    CHECK(bb.label == BoundaryLabel::SingularAtInfinity);
    REQUIRE(bb.rays.size() == 2);
    REQUIRE(bb.witnesses.size() == 1);
    CHECK(bb.witnesses[0].kind == ProjectiveDirection::Kind::AxisPoint);
    // the ray through (1,0) alone is regular: dh = (0, x^2) there
    for (const auto& ray : bb.rays)
        if (ray.direction.kind == ProjectiveDirection::Kind::XChart) CHECK_FALSE(ray.gradient_vanishes);
    for (const auto& ray : bb.rays) CHECK(ray.condition_ii_psd);

    // full circle: regular with no rays
    auto qc = components(quart);
    REQUIRE(qc.size() == 1);
    bb = boundary_behavior(quart, qc[0]);
    CHECK(bb.label == BoundaryLabel::Regular);
    CHECK(bb.rays.empty());
    CHECK(bb.witnesses.empty());

    // simple zero lines: x^3 - 3xy^2 is regular at all its boundary rays,
    // two of which are irrational
    for (const auto& comp : hyperbolic_components(cubic_fan)) {
        auto b = boundary_behavior(cubic_fan, comp);
        CHECK(b.label == BoundaryLabel::Regular);
        CHECK(b.witnesses.empty());
    }

    // h1 = 1/4 (y^2 - 2x^2)^2: boundary rays are double lines at t = +-sqrt2,
    // where the gradient vanishes identically (symbolic algebraic test)
    for (const auto& comp : components(h1)) {
        auto b = boundary_behavior(h1, comp);
        CHECK(b.label == BoundaryLabel::SingularAtInfinity);
        CHECK(b.witnesses.size() == 2);
    }
}

TEST_CASE("boundary_behavior singular for all enumerated forms") {
    for (int tau = 3; tau <= 12; ++tau)
        for (int k = 1; k <= tau / 2; ++k) {
            BF h = BF::monomial(tau, k);
            for (const auto& comp : hyperbolic_components(h)) {
                auto b = boundary_behavior(h, comp);
                CHECK(b.label == BoundaryLabel::SingularAtInfinity);
                CHECK(!b.witnesses.empty());
            }
        }
}

TEST_CASE("tangent_cone_intersection fixtures") {
    auto comps = components(x2y);
    const auto& c = component_containing(comps, Point2<Rational>{1, 1}, x2y);
    auto ci = tangent_cone_intersection(x2y, c, Point2<Rational>{1, 1});
    CHECK(ci.direction.x == -1);
    CHECK(ci.direction.y == 2);
    REQUIRE(ci.lo_exact.has_value());
    REQUIRE(ci.hi_exact.has_value());
    CHECK(*ci.lo_exact == Rational(-1, 2));
    CHECK(*ci.hi_exact == Rational(1));
    CHECK(ci.lo == doctest::Approx(-0.5));
    CHECK(ci.hi == doctest::Approx(1.0));
    CHECK(ci.bounded());
    CHECK(ci.lo < 0);
    CHECK(ci.hi > 0);

    // full circle: unbounded
    auto qc = components(quart);
    auto qi = tangent_cone_intersection(quart, qc[0], Point2<Rational>{1, 0});
    CHECK_FALSE(qi.bounded());

    CHECK_THROWS(tangent_cone_intersection(x2y, c, Point2<Rational>{-1, 1}));
}

TEST_CASE("tangent_cone_intersection bounded on special curves") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    for (int tau = 3; tau <= 12; ++tau)
        for (int k = 1; k <= tau / 2; ++k) {
            BF h = BF::monomial(tau, k);
            auto comps = components(h);
            for (int i = 0; i < 5; ++i) {
                // rational point on {x^(tau-k) y^k = 1}: (s^k, s^(k-tau))
                Rational s(num(rng), den(rng));
                Point2<Rational> p{scalar_pow(s, unsigned(k)),
                                   Rational(1) / scalar_pow(s, unsigned(tau - k))};
                CHECK(h(p) == 1);
                const auto& comp = component_containing(comps, p, h);
                auto ci = tangent_cone_intersection(h, comp, p);
                CHECK(ci.bounded());
                CHECK(ci.lo < 0);
                CHECK(ci.hi > 0);
                // boundary rays of monomial arcs are coordinate axes: exact
                REQUIRE(ci.lo_exact.has_value());
                REQUIRE(ci.hi_exact.has_value());
                // endpoint points leave the open first quadrant
                auto at = [&](const Rational& t) {
                    return Point2<Rational>{p.x + t * ci.direction.x, p.y + t * ci.direction.y};
                };
                CHECK(sign(at(*ci.lo_exact).x) * sign(at(*ci.lo_exact).y) == 0);
                CHECK(sign(at(*ci.hi_exact).x) * sign(at(*ci.hi_exact).y) == 0);
            }
        }

    // algebraic boundary rays: h1 components still give bounded intervals
    auto comps = components(h1);
    for (const auto& comp : comps) {
        auto ci = tangent_cone_intersection(h1, comp, comp.sample_direction);
        CHECK(ci.bounded());
    }
}
