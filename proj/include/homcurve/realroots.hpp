#pragma once

// Exact real-root isolation for rational univariate polynomials:
// Yun square-free decomposition, Sturm sequences, bisection isolation.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homcurve/univariate.hpp"

namespace homcurve {

struct RootInterval {
    Rational lo, hi;                    // lo <= hi; open interval unless exact
    int multiplicity = 1;               // w.r.t. the query polynomial
    std::optional<Rational> exact_point;  // set when the root is known rational

    bool is_exact() const { return exact_point.has_value(); }
    Rational midpoint() const { return exact_point ? *exact_point : (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

/// p = c * prod q_i^{m_i}, q_i square-free and pairwise coprime (Yun).
/// Factors are returned primitive with ascending multiplicity.
inline std::vector<std::pair<RPoly, int>> square_free_decomposition(const RPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_decomposition: zero polynomial");
    std::vector<std::pair<RPoly, int>> out;
    if (p.degree() == 0) return out;
    RPoly a = primitive_part(p);
    RPoly d = a.derivative();
    RPoly g = poly_gcd(a, d);
    RPoly b = divmod(a, g).first;
    RPoly c = divmod(d, g).first;
    RPoly z = c - b.derivative();
    int m = 1;
    while (b.degree() > 0) {
        RPoly f = poly_gcd(b, z);
        if (f.degree() > 0) out.emplace_back(primitive_part(f), m);
        b = divmod(b, f).first;
        z = divmod(z, f).first - b.derivative();
        ++m;
    }
    return out;
}

/// Square-free part of p (product of the distinct irreducible factors), primitive.
inline RPoly square_free_part(const RPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
    if (p.degree() == 0) return RPoly::constant(Rational(1));
    RPoly a = primitive_part(p);
    return primitive_part(divmod(a, poly_gcd(a, a.derivative())).first);
}

inline std::vector<RPoly> sturm_sequence(const RPoly& p) {
    std::vector<RPoly> seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(primitive_part(-r) * (r.lead() > 0 ? Rational(-1) : Rational(1)));
    }
    return seq;
}

inline int sign_variations(const std::vector<RPoly>& seq, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : seq) {
        int s = sign(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

struct SturmResult {
    int count = 0;             // distinct roots in (a, b]
    bool endpoint_is_root = false;  // an endpoint of the query hit a root; count unusable
};

/// Exact count of distinct real roots of square-free p in (a, b].
/// Endpoint collisions are reported, not resolved: the caller perturbs.
inline SturmResult sturm_count(const RPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (sign(p(a)) == 0 || sign(p(b)) == 0) return {0, true};
    auto seq = sturm_sequence(p);
    return {sign_variations(seq, a) - sign_variations(seq, b), false};
}

/// Bisect once, keeping the unique root inside. p must be square-free with
/// exactly the one root of iv in (lo, hi).
inline void refine_root_interval(const RPoly& p, RootInterval& iv) {
    if (iv.is_exact()) return;
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sign(p(mid));
    if (sm == 0) {
        iv.lo = iv.hi = mid;
        iv.exact_point = mid;
        return;
    }
    if (sign(p(iv.lo)) * sm < 0)
        iv.hi = mid;
    else
        iv.lo = mid;
}

/// The rational with smallest denominator (then smallest numerator) in the
/// closed interval [lo, hi], via the Stern-Brocot / continued fraction walk.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi
    Integer fl = numerator(lo) / denominator(lo);
    if (Rational(fl) >= lo) return Rational(fl);  // lo is an integer
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational frac_lo = lo - Rational(fl), frac_hi = hi - Rational(fl);
    // recurse on reciprocals
    Rational inner = simplest_rational_in(Rational(1) / frac_hi, Rational(1) / frac_lo);
    return Rational(fl) + Rational(1) / inner;
}

namespace detail {

// Isolation on a square-free polynomial via Sturm bisection. Endpoints of the
// initial box are integers, so all bisection points are dyadic; a dyadic
// rational root is detected exactly when a bisection point lands on it.
inline void isolate_square_free(const RPoly& p, std::vector<RootInterval>& out, int multiplicity) {
    if (p.degree() < 1) return;
    auto seq = sturm_sequence(p);
    Rational bound = cauchy_root_bound(p);
    Integer bi = numerator(bound) / denominator(bound) + 1;
    Rational lo(-bi), hi(bi);
    // Initial endpoints are outside the root range, so never roots themselves.
    struct Box {
        Rational lo, hi;
        int n;
    };
    std::vector<Box> work;
    int total = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (total > 0) work.push_back({lo, hi, total});
    while (!work.empty()) {
        Box b = work.back();
        work.pop_back();
        if (b.n == 1) {
            RootInterval iv{b.lo, b.hi, multiplicity, std::nullopt};
            // Tighten, then probe for an exact rational root: the root is
            // rational iff, after enough refinement, it is the simplest
            // rational in its isolating interval.
            for (int i = 0; i < 24 && !iv.is_exact(); ++i) refine_root_interval(p, iv);
            if (!iv.is_exact()) {
                Rational s = simplest_rational_in(iv.lo, iv.hi);
                if (sign(p(s)) == 0) {
                    iv.lo = iv.hi = s;
                    iv.exact_point = s;
                }
            }
            out.push_back(iv);
            continue;
        }
        Rational mid = (b.lo + b.hi) / 2;
        if (sign(p(mid)) == 0) {
            out.push_back({mid, mid, multiplicity, mid});
            // Split off the exact root and recurse on both sides with a margin
            // that excludes it.
            Rational eps = (b.hi - b.lo) / 1024;
            Rational ml = mid - eps, mr = mid + eps;
            while (sign(p(ml)) == 0) ml = (b.lo + ml) / 2;
            while (sign(p(mr)) == 0) mr = (mr + b.hi) / 2;
            int nl = sign_variations(seq, b.lo) - sign_variations(seq, ml);
            int nr = sign_variations(seq, mr) - sign_variations(seq, b.hi);
            if (nl > 0) work.push_back({b.lo, ml, nl});
            if (nr > 0) work.push_back({mr, b.hi, nr});
        } else {
            int nl = sign_variations(seq, b.lo) - sign_variations(seq, mid);
            int nr = b.n - nl;
            if (nl > 0) work.push_back({b.lo, mid, nl});
            if (nr > 0) work.push_back({mid, b.hi, nr});
        }
    }
}

}  // namespace detail

inline void refine_until_width(const RPoly& p, RootInterval& iv, const Rational& w) {
    while (!iv.is_exact() && iv.width() > w) refine_root_interval(p, iv);
}

/// One interval per distinct real root of p, pairwise disjoint, sorted
/// ascending, with multiplicities from the square-free decomposition.
inline std::vector<RootInterval> isolate_roots(const RPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    std::vector<RootInterval> out;
    auto sqf = square_free_decomposition(p);
    for (auto& [q, m] : sqf) {
        std::vector<RootInterval> part;
        detail::isolate_square_free(q, part, m);
        // Roots of distinct square-free factors are distinct; refine both
        // lists until every pair of intervals is disjoint.
        for (auto& iv : part) {
            for (auto& prev : out) {
                const RPoly* pprev = nullptr;
                for (auto& [qq, mm] : sqf)
                    if (mm == prev.multiplicity) pprev = &qq;
                while (!(iv.hi < prev.lo || prev.hi < iv.lo ||
                         (iv.is_exact() && prev.is_exact()))) {
                    refine_root_interval(q, iv);
                    if (pprev) refine_root_interval(*pprev, prev);
                    if (iv.is_exact() && prev.is_exact()) break;
                }
            }
            out.push_back(iv);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.midpoint() < b.midpoint(); });
    return out;
}

struct SignPartition {
    std::vector<RootInterval> breakpoints;  // ascending distinct real roots
    std::vector<int> signs;                 // size breakpoints+1: sign on each open interval
};

/// Signs of p on the maximal root-free open intervals of the real line.
inline SignPartition sign_partition(const RPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sign_partition: zero polynomial");
    SignPartition sp;
    sp.breakpoints = isolate_roots(p);
    Rational bound = cauchy_root_bound(p) + 1;
    std::vector<Rational> samples;
    samples.push_back(-bound);
    for (size_t i = 0; i + 1 < sp.breakpoints.size(); ++i)
        samples.push_back((sp.breakpoints[i].hi + sp.breakpoints[i + 1].lo) / 2);
    if (!sp.breakpoints.empty()) samples.push_back(bound);
    if (sp.breakpoints.empty()) {
        sp.signs.push_back(sign(p(Rational(0))));
        return sp;
    }
    for (const auto& s : samples) sp.signs.push_back(sign(p(s)));
    return sp;
}

}  // namespace homcurve
