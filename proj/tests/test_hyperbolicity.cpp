#include <cmath>
#include <random>

#include "doctest.h"
#include "homcurve/hyperbolicity.hpp"

using namespace homcurve;

namespace {

using BF = BinaryForm<Rational>;

const BF x2y = BF::monomial(3, 1);
const BF x2y2 = BF::monomial(4, 2);
const BF quart(4, {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)});  // x^4 + y^4

// Dense sampling oracle: number of maximal sign-runs of h > 0 over uniformly
// spaced circle directions.
int dense_component_count(const BF& h, int n = 10000) {
    std::vector<double> c;
    for (const auto& v : h.coeffs()) c.push_back(to_double(v));
    int tau = h.degree();
    auto ev = [&](double x, double y) {
        double acc = 0;
        for (int k = 0; k <= tau; ++k) acc += c[size_t(k)] * std::pow(x, tau - k) * std::pow(y, k);
        return acc;
    };
    std::vector<double> vals(static_cast<size_t>(n), 0);
    double hmax = 0;
    for (int i = 0; i < n; ++i) {
        double th = 2 * M_PI * i / n;
        vals[size_t(i)] = ev(std::cos(th), std::sin(th));
        hmax = std::max(hmax, std::abs(vals[size_t(i)]));
    }
    // Relative threshold: even-multiplicity zeros do not change sign, they
    // only dip to O(spacing^2); treat such dips as boundaries.
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[size_t(i)] = vals[size_t(i)] > 1e-5 * hmax ? 1 : 0;
    int runs = 0;
    for (int i = 0; i < n; ++i)
        if (pos[size_t(i)] == 1 && pos[size_t((i + n - 1) % n)] == 0) ++runs;
    if (runs == 0 && pos[0] == 1) runs = 1;  // positive on the whole circle
    return runs;
}

// Eigenvalue-sign oracle for the 2x2 Hessian.
bool hyperbolic_by_eigenvalues(const BF& h, double x, double y) {
    auto H = hessian(h);
    double a = to_double(H[0](Rational(0), Rational(0)));  // not used; keep exact eval below
    (void)a;
    Point2<Rational> p{Rational(0), Rational(0)};
    (void)p;
    double hxx = 0, hxy = 0, hyy = 0;
    {
        std::vector<double> cs;
        auto evf = [&](const BF& f) {
            double acc = 0;
            for (int k = 0; k <= f.degree(); ++k)
                acc += to_double(f.coeff(k)) * std::pow(x, f.degree() - k) * std::pow(y, k);
            return acc;
        };
        hxx = evf(H[0]);
        hxy = evf(H[1]);
        hyy = evf(H[3]);
    }
    double tr = hxx + hyy, det = hxx * hyy - hxy * hxy;
    double disc = std::sqrt(std::max(tr * tr - 4 * det, 0.0));
    double l1 = (tr + disc) / 2, l2 = (tr - disc) / 2;
    // -d2h has signature (1,1) iff d2h has one positive and one negative eigenvalue
    bool sig11 = l1 > 0 && l2 < 0;
    double hval = 0;
    for (int k = 0; k <= h.degree(); ++k)
        hval += to_double(h.coeff(k)) * std::pow(x, h.degree() - k) * std::pow(y, k);
    return hval > 0 && sig11;
}

}  // namespace

TEST_CASE("is_hyperbolic_point fixtures") {
    CHECK(is_hyperbolic_point(x2y, Point2<Rational>{1, 1}));
    CHECK(hyperbolic_by_eigenvalues(x2y, 1, 1));
    CHECK_FALSE(is_hyperbolic_point(quart, Point2<Rational>{1, 1}));
    CHECK_FALSE(hyperbolic_by_eigenvalues(quart, 1, 1));
    CHECK_THROWS(is_hyperbolic_point(x2y, Point2<Rational>{0, 0}));
    // every point of the open first quadrant is hyperbolic for x^(tau-k) y^k
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(1, 20);
    for (int tau = 3; tau <= 9; ++tau)
        for (int k = 1; k <= tau / 2; ++k)
            for (int i = 0; i < 5; ++i) {
                Point2<Rational> p{Rational(num(rng), num(rng)), Rational(num(rng), num(rng))};
                CHECK(is_hyperbolic_point(BF::monomial(tau, k), p));
            }
}

TEST_CASE("is_hyperbolic_point agrees with eigenvalue oracle on random forms") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-4, 4), pt(1, 8);
    for (int i = 0; i < 200; ++i) {
        int tau = 3 + i % 6;
        std::vector<Rational> c(size_t(tau) + 1);
        for (auto& v : c) v = coeff(rng);
        BF h(tau, std::move(c));
        Point2<Rational> p{Rational(pt(rng) - 4), Rational(pt(rng) - 4)};
        if ((is_zero(p.x) && is_zero(p.y)) || h.is_zero()) continue;
        // skip borderline points where the float oracle is unreliable
        if (is_zero(h(p)) || is_zero(hessian_det(h)(p))) continue;
        CHECK(is_hyperbolic_point(h, p) == hyperbolic_by_eigenvalues(h, to_double(p.x), to_double(p.y)));
    }
}

TEST_CASE("circle_sign_data fixtures") {
    // x^2 y: h > 0 exactly on the two open upper quadrants
    auto d = circle_sign_data(x2y);
    REQUIRE(d.events.size() == 4);  // (0,-1), (1,0), (0,1), (-1,0)
    int pos = 0;
    for (const auto& s : d.segments) pos += s.sign_h > 0;
    CHECK(pos == 2);

    // x^2 y^2: four arcs, the four open quadrants
    d = circle_sign_data(x2y2);
    REQUIRE(d.segments.size() == 4);
    for (const auto& s : d.segments) {
        CHECK(s.sign_h > 0);
        CHECK(s.sign_det < 0);
    }
    for (const auto& e : d.events) CHECK(e.h_zero);

    // x^4 + y^4: positive on the full circle
    d = circle_sign_data(quart);
    for (const auto& s : d.segments) CHECK(s.sign_h > 0);
    for (const auto& e : d.events) CHECK_FALSE(e.h_zero);
}

TEST_CASE("components fixtures and Theorem-style parity") {
    for (int tau = 3; tau <= 12; ++tau)
        for (int k = 1; k <= tau / 2; ++k) {
            auto cs = components(BF::monomial(tau, k));
            int expected = (k % 2 == 1 || tau % 2 == 1) ? 2 : 4;
            CHECK(int(cs.size()) == expected);
            for (const auto& c : cs) {
                CHECK(c.hyperbolic);
                CHECK_FALSE(c.mixed);
                CHECK(is_hyperbolic_point(BF::monomial(tau, k), c.sample_direction));
            }
        }
    auto cs = components(quart);
    REQUIRE(cs.size() == 1);
    CHECK_FALSE(cs[0].hyperbolic);
    CHECK_FALSE(cs[0].mixed);
}

TEST_CASE("hyperbolic_components fixtures") {
    auto hc = hyperbolic_components(x2y);
    CHECK(hc.size() == 2);
    for (const auto& c : hc) CHECK(c.hyperbolic);

    CHECK(hyperbolic_components(quart).empty());

    // h1 = x^4 - x^2 y^2 + 1/4 y^4: four components, all hyperbolic
    BF h1(4, {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1, 4)});
    hc = hyperbolic_components(h1);
    CHECK(hc.size() == 4);
    for (const auto& c : hc) CHECK(c.hyperbolic);
    CHECK(components(h1).size() == 4);
}

TEST_CASE("dense-sampling oracle agreement on assorted forms") {
    std::vector<BF> forms = {x2y, x2y2, quart,
                             BF(3, {Rational(1), Rational(0), Rational(-3), Rational(0)}),  // x^3 - 3xy^2
                             BF(4, {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1, 4)}),
                             BF(5, {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}),
                             BF(4, {Rational(-1), Rational(0), Rational(0), Rational(0), Rational(-1)})};
    for (const auto& h : forms) CHECK(int(components(h).size()) == dense_component_count(h));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < 30; ++i) {
        int tau = 3 + i % 5;
        std::vector<Rational> c(size_t(tau) + 1);
        for (auto& v : c) v = coeff(rng);
        BF h(tau, std::move(c));
        if (h.is_zero()) continue;
        CHECK(int(components(h).size()) == dense_component_count(h));
    }
}

TEST_CASE("ray scaling and antipodal consistency") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < 20; ++i) {
        int tau = 3 + i % 4;
        std::vector<Rational> c(size_t(tau) + 1);
        for (auto& v : c) v = coeff(rng);
        BF h(tau, std::move(c));
        if (h.is_zero()) continue;
        for (const auto& comp : components(h)) {
            // the lifted sample point lies on {h=1}
            BinaryForm<double> hf(tau, [&] {
                std::vector<double> d;
                for (const auto& v : h.coeffs()) d.push_back(to_double(v));
                return d;
            }());
            CHECK(std::abs(hf(comp.sample_point[0], comp.sample_point[1]) - 1.0) <= 1e-9);
            // det sign is constant along the ray (degree 2(tau-2) homogeneity)
            auto dform = hessian_det(h);
            Point2<Rational> u = comp.sample_direction;
            CHECK(sign(dform(u)) == sign(dform(Point2<Rational>{u.x * 3, u.y * 3})));
            // antipodal behaviour of h
            Rational at = h(Point2<Rational>{-u.x, -u.y});
            if (tau % 2 == 0)
                CHECK(sign(at) == sign(h(u)));
            else
                CHECK(sign(at) == -sign(h(u)));
        }
    }
}
