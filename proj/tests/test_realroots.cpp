#include <random>

#include "doctest.h"
#include "homcurve/realroots.hpp"

using namespace homcurve;

namespace {

RPoly from_ints(std::initializer_list<int> asc) {
    std::vector<Rational> c;
    for (int v : asc) c.emplace_back(v);
    return RPoly(std::move(c));
}

// Dense sign-change scan, the independent oracle for root counts.
int dense_scan_roots(const RPoly& p, const RPoly& sqfree) {
    Rational b = cauchy_root_bound(sqfree) + 1;
    double lo = -to_double(b), hi = to_double(b);
    int n = 0, prev = 0;
    double step = 1e-4 * (hi - lo);
    std::vector<double> c;
    for (const auto& v : sqfree.coeffs()) c.push_back(to_double(v));
    auto ev = [&](double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (double x = lo; x <= hi; x += step) {
        double v = ev(x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++n;
        prev = s;
    }
    (void)p;
    return n;
}

}  // namespace

TEST_CASE("square-free decomposition fixtures") {
    // t^2 -> [(t, 2)]
    auto d = square_free_decomposition(from_ints({0, 0, 1}));
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == from_ints({0, 1}));
    CHECK(d[0].second == 2);

    // t (t-1)^2 -> [(t, 1), (t-1, 2)]
    d = square_free_decomposition(from_ints({0, 1, -2, 1}));
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == from_ints({0, 1}));
    CHECK(d[0].second == 1);
    CHECK(d[1].first == from_ints({-1, 1}));
    CHECK(d[1].second == 2);

    // 1 - t^2 + 1/4 t^4 = 1/4 (t^2 - 2)^2 -> [(t^2 - 2, 2)]
    d = square_free_decomposition(RPoly({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1, 4)}));
    REQUIRE(d.size() == 1);
    CHECK(d[0].first == from_ints({-2, 0, 1}));
    CHECK(d[0].second == 2);
    // certificate: re-expanding reproduces the input up to the constant
    auto sq = d[0].first * d[0].first;
    CHECK(sq * Rational(1, 4) == RPoly({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1, 4)}));

    CHECK_THROWS(square_free_decomposition(RPoly{}));
}

TEST_CASE("sturm_count fixtures") {
    auto t2m2 = from_ints({-2, 0, 1});
    CHECK(sturm_count(t2m2, Rational(0), Rational(2)).count == 1);
    CHECK(sturm_count(t2m2, Rational(-2), Rational(2)).count == 2);
    CHECK(sturm_count(from_ints({1, 0, 1}), Rational(-10), Rational(10)).count == 0);
    // endpoint collision is a typed signal
    CHECK(sturm_count(from_ints({0, 1}), Rational(0), Rational(1)).endpoint_is_root);
}

TEST_CASE("isolate_roots fixtures") {
    // t (t-1)^2
    auto r = isolate_roots(from_ints({0, 1, -2, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0].exact_point == Rational(0));
    CHECK(r[0].multiplicity == 1);
    CHECK(r[1].exact_point == Rational(1));
    CHECK(r[1].multiplicity == 2);

    // t^2 - 2: two simple irrational roots, refinable below 2^-30
    auto p = from_ints({-2, 0, 1});
    r = isolate_roots(p);
    REQUIRE(r.size() == 2);
    for (auto& iv : r) {
        CHECK(iv.multiplicity == 1);
        refine_until_width(p, iv, Rational(1, Integer(1) << 30));
        CHECK(iv.width() <= Rational(1, Integer(1) << 30));
    }
    CHECK(std::abs(to_double(r[0].midpoint()) + std::sqrt(2.0)) < 1e-8);
    CHECK(std::abs(to_double(r[1].midpoint()) - std::sqrt(2.0)) < 1e-8);

    // (t^2 - 2)^2: same roots, multiplicity 2; multiplicity via gcd(p, p')
    auto p2 = p * p;
    r = isolate_roots(p2);
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 2);
    CHECK(r[1].multiplicity == 2);
    CHECK(poly_gcd(p2, p2.derivative()).degree() == 2);
}

TEST_CASE("sign_partition fixtures") {
    auto sp = sign_partition(from_ints({0, 1}));  // t
    REQUIRE(sp.breakpoints.size() == 1);
    CHECK(sp.signs == std::vector<int>{-1, 1});

    sp = sign_partition(from_ints({0, 0, -1}));  // -t^2
    REQUIRE(sp.breakpoints.size() == 1);
    CHECK(sp.signs == std::vector<int>{-1, -1});

    sp = sign_partition(from_ints({0, -1, 0, 1}));  // t^3 - t
    REQUIRE(sp.breakpoints.size() == 3);
    CHECK(sp.signs == std::vector<int>{-1, 1, -1, 1});
}

TEST_CASE("random polynomials: oracle agreement and invariants") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> deg(1, 12), coeff(-8, 8), den(1, 4);
    int checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int d = deg(rng);
        std::vector<Rational> c(size_t(d) + 1);
        for (auto& v : c) v = Rational(coeff(rng), den(rng));
        RPoly p(std::move(c));
        if (p.degree() < 1) continue;
        ++checked;
        auto roots = isolate_roots(p);
        auto sf = square_free_part(p);

        // count agreement with the dense scan oracle
        CHECK(int(roots.size()) == dense_scan_roots(p, sf));

        // the decomposition is complete: sum m_i * deg q_i = deg p,
        // and re-expanding reproduces p up to its leading constant
        auto dec = square_free_decomposition(p);
        int dsum = 0;
        RPoly prod = RPoly::constant(Rational(1));
        for (auto& [q, m] : dec) {
            dsum += m * q.degree();
            for (int j = 0; j < m; ++j) prod = prod * q;
        }
        CHECK(dsum == p.degree());
        CHECK(prod * (p.lead() / prod.lead()) == p);

        // deg p - deg(square-free part) bounds the excess multiplicity of
        // the real roots
        int msum = 0;
        for (auto& iv : roots) msum += iv.multiplicity;
        CHECK(msum - int(roots.size()) <= p.degree() - sf.degree());

        // every interval brackets a sign change of the square-free part
        for (auto& iv : roots) {
            if (iv.is_exact()) {
                CHECK(sf(*iv.exact_point) == 0);
            } else {
                CHECK(sign(sf(iv.lo)) * sign(sf(iv.hi)) < 0);
            }
        }

        // refinement halves width and keeps the root bracketed
        for (auto& iv : roots) {
            if (iv.is_exact()) continue;
            Rational w = iv.width();
            RootInterval iv2 = iv;
            refine_root_interval(sf, iv2);
            CHECK((iv2.is_exact() || iv2.width() * 2 == w));
            if (!iv2.is_exact()) CHECK(sign(sf(iv2.lo)) * sign(sf(iv2.hi)) < 0);
        }
    }
    CHECK(checked > 900);
}

TEST_CASE("sign_partition consistent with evaluation at midpoints, random") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg(1, 8), coeff(-6, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Rational> c(size_t(deg(rng)) + 1);
        for (auto& v : c) v = coeff(rng);
        RPoly p(std::move(c));
        if (p.degree() < 1) continue;
        auto sp = sign_partition(p);
        Rational b = cauchy_root_bound(p) + 1;
        std::vector<Rational> samples;
        if (sp.breakpoints.empty()) {
            samples.push_back(0);
        } else {
            samples.push_back(-b);
            for (size_t i = 0; i + 1 < sp.breakpoints.size(); ++i)
                samples.push_back((sp.breakpoints[i].hi + sp.breakpoints[i + 1].lo) / 2);
            samples.push_back(b);
        }
        REQUIRE(samples.size() == sp.signs.size());
        for (size_t i = 0; i < samples.size(); ++i) CHECK(sign(p(samples[i])) == sp.signs[i]);
    }
}
