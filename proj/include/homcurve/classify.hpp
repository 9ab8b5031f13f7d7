#pragma once

// Classification of hyperbolic binary forms up to linear equivalence:
// factorization over the reals, reduction to the monomial normal form
// x^(tau-k) y^k, enumeration per degree, and an equivalence test.

#include <complex>
#include <numeric>
#include <optional>

#include "homcurve/hyperbolicity.hpp"
#include "homcurve/quadratic_field.hpp"
#include "homcurve/symmetry.hpp"

namespace homcurve {

struct RealFactor {
    RPoly poly;         // primitive square-free factor of h(1, t)
    int multiplicity;
    std::vector<RootInterval> real_roots;  // lines y = t x through its real roots
};

/// h = constant * x^axis_multiplicity * prod_f f(y/x)^multiplicity, homogenized.
struct RealFactorization {
    Rational constant;
    int axis_multiplicity = 0;  // multiplicity of the line {x = 0}
    std::vector<RealFactor> factors;

    int distinct_real_lines() const {
        int n = axis_multiplicity > 0 ? 1 : 0;
        for (const auto& f : factors) n += int(f.real_roots.size());
        return n;
    }

    /// Sum of line multiplicities; equals the degree exactly when h splits
    /// into real linear factors.
    int real_line_multiplicity() const {
        int n = axis_multiplicity;
        for (const auto& f : factors) n += f.multiplicity * int(f.real_roots.size());
        return n;
    }
};

inline RealFactorization factor_real(const BinaryForm<Rational>& h) {
    if (h.is_zero()) throw std::invalid_argument("factor_real: zero form");
    RealFactorization out;
    RPoly p = dehomogenize(h, Chart::X);
    out.axis_multiplicity = h.degree() - p.degree();
    if (p.degree() == 0) {
        out.constant = p.lead();
        return out;
    }
    RPoly prod = RPoly::constant(Rational(1));
    for (auto& [q, m] : square_free_decomposition(p)) {
        RealFactor f{q, m, {}};
        detail::isolate_square_free(q, f.real_roots, m);
        std::sort(f.real_roots.begin(), f.real_roots.end(),
                  [](const RootInterval& a, const RootInterval& b) { return a.midpoint() < b.midpoint(); });
        for (int i = 0; i < m; ++i) prod = prod * q;
        out.factors.push_back(std::move(f));
    }
    out.constant = p.lead() / prod.lead();
    if (!(prod * out.constant == p)) throw std::logic_error("factor_real: decomposition mismatch");
    return out;
}

/// Lines through the projectivized singular points of {h = 0}, i.e. the
/// directions where the gradient vanishes.
struct SingularLine {
    bool axis = false;   // the direction (0, 1)
    RootInterval root;   // parameter t of the line y = t x, when !axis
    RPoly witness;       // certifying polynomial: gcd of the dehomogenized partials
};

inline std::vector<SingularLine> singular_directions(const BinaryForm<Rational>& h) {
    if (h.degree() < 1 || h.is_zero()) throw std::invalid_argument("singular_directions: need a nonzero form");
    auto hx = partial(h, Var::X), hy = partial(h, Var::Y);
    std::vector<SingularLine> out;
    if (is_zero(hx.coeff(hx.degree())) && is_zero(hy.coeff(hy.degree())))
        out.push_back({true, {}, {}});  // both partials vanish at (0, 1)
    RPoly g = poly_gcd(dehomogenize(hx, Chart::X), dehomogenize(hy, Chart::X));
    if (g.degree() >= 1)
        for (const auto& r : isolate_roots(g)) out.push_back({false, r, g});
    return out;
}

struct MonomialNormalForm {
    int k = 0;  // target x^(tau-k) y^k, 1 <= k <= tau/2
    // The normalizer A with pullback(h, A) equal to the monomial, in the
    // smallest field that can express it. Exactly one of the three is set.
    std::optional<LinearMap<Rational>> rational_map;
    std::optional<LinearMap<QuadExt>> quadratic_map;
    std::optional<LinearMap<double>> approx_map;
    double approx_residual = 0;  // max coefficient error of the approx map

    bool exact() const { return rational_map.has_value() || quadratic_map.has_value(); }

    LinearMap<double> as_double() const {
        if (rational_map)
            return {to_double(rational_map->a11), to_double(rational_map->a12), to_double(rational_map->a21),
                    to_double(rational_map->a22)};
        if (quadratic_map)
            return {to_double(quadratic_map->a11), to_double(quadratic_map->a12), to_double(quadratic_map->a21),
                    to_double(quadratic_map->a22)};
        return *approx_map;
    }
};

namespace detail {

inline void ext_gcd(long a, long b, long& u, long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return;
    }
    long u1, v1;
    ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
}

inline QuadExt quad_ipow(const QuadExt& x, long e) {
    if (e >= 0) return scalar_pow(x, unsigned(e));
    return QuadExt(1) / scalar_pow(x, unsigned(-e));
}

/// Pulls square factors out of the radicand: d = s^2 d' with d' square-free
/// in the scanned range; s is accumulated into scale.
inline Integer reduce_radicand(Integer d, Rational& scale) {
    for (Integer f = 2; f * f <= d && f < 100000; ++f)
        while (d % (f * f) == 0) {
            d /= f * f;
            scale *= Rational(f);
        }
    return d;
}

struct LineSpec {
    QuadExt u, v;  // covector: the line is {u x + v y = 0}
    int multiplicity;
};

inline BinaryForm<QuadExt> to_quad(const BinaryForm<Rational>& h) {
    std::vector<QuadExt> c;
    for (const auto& v : h.coeffs()) c.push_back(QuadExt(v));
    return BinaryForm<QuadExt>(h.degree(), std::move(c));
}

}  // namespace detail

/// Normalizer to x^(tau-k) y^k when h is a product of powers of exactly two
/// distinct real lines with an orientation admitting h > 0 somewhere;
/// nullopt otherwise.
inline std::optional<MonomialNormalForm> monomial_normal_form(const BinaryForm<Rational>& h) {
    if (h.degree() < 3) throw std::invalid_argument("monomial_normal_form: degree must be >= 3");
    auto fac = factor_real(h);
    int tau = h.degree();
    if (fac.distinct_real_lines() != 2 || fac.real_line_multiplicity() != tau) return std::nullopt;

    std::vector<detail::LineSpec> lines;
    if (fac.axis_multiplicity > 0) lines.push_back({QuadExt(1), QuadExt(0), fac.axis_multiplicity});
    for (const auto& f : fac.factors) {
        if (f.real_roots.empty()) continue;
        if (f.real_roots.size() == 1) {
            // a lone real root of a factor is rational: either the factor is
            // linear, or its remaining roots are complex, which the line
            // count has already excluded
            if (!f.real_roots[0].is_exact()) throw std::logic_error("monomial_normal_form: lone irrational root");
            lines.push_back({QuadExt(-*f.real_roots[0].exact_point), QuadExt(1), f.multiplicity});
        } else {
            // two roots of one square-free factor: rational pair or a
            // conjugate quadratic pair
            if (f.real_roots[0].is_exact()) {
                for (const auto& r : f.real_roots)
                    lines.push_back({QuadExt(-*r.exact_point), QuadExt(1), f.multiplicity});
            } else {
                Rational a = f.poly.coeff(2), b = f.poly.coeff(1), c0 = f.poly.coeff(0);
                Rational disc = b * b - 4 * a * c0;
                Rational s(1);
                Integer d = detail::reduce_radicand(numerator(disc), s);
                // roots (-b +- s sqrt(d)) / (2a)
                QuadExt r1{-b / (2 * a), s / (2 * a), d};
                lines.push_back({-r1, QuadExt(1), f.multiplicity});
                lines.push_back({-conjugate(r1), QuadExt(1), f.multiplicity});
            }
        }
    }
    if (lines.size() != 2) throw std::logic_error("monomial_normal_form: line extraction mismatch");
    if (lines[0].multiplicity < lines[1].multiplicity) std::swap(lines[0], lines[1]);
    long m1 = lines[0].multiplicity, m2 = lines[1].multiplicity;

    MonomialNormalForm nf;
    nf.k = int(m2);
    // constant relative to monic line factors: the primitive factors carry
    // integer leading coefficients
    Rational C = fac.constant;
    for (const auto& f : fac.factors)
        if (!f.real_roots.empty()) C *= scalar_pow(f.poly.lead(), unsigned(f.multiplicity));
    Rational V = Rational(1) / C;
    bool both_even = m1 % 2 == 0 && m2 % 2 == 0;
    if (both_even && V < 0) return std::nullopt;  // h <= 0 everywhere

    long g = std::gcd(m1, m2), u, v;
    detail::ext_gcd(m1, m2, u, v);
    Rational absV = rational_abs(V);
    Integer field_d = 0;
    for (const auto& l : lines) {
        if (l.u.d != 0) field_d = l.u.d;
        if (l.v.d != 0) field_d = l.v.d;
    }

    // w with w^g = |V|, in Q or the field of the lines or a fresh sqrt
    std::optional<QuadExt> w;
    if (auto r = rational_nth_root(absV, unsigned(g)))
        w = QuadExt(*r);
    else if (g % 2 == 0 && field_d != 0) {
        // w = r sqrt(d): r^g d^(g/2) = |V|
        Rational target = absV / Rational(pow(field_d, unsigned(g / 2)));
        if (auto r = rational_nth_root(target, unsigned(g))) w = QuadExt(Rational(0), *r, field_d);
    } else if (g % 2 == 0 && field_d == 0) {
        if (auto W = rational_nth_root(absV, unsigned(g / 2))) w = quad_sqrt(*W);
    }

    int s1 = 1, s2 = 1;
    if (V < 0) (m1 % 2 == 1 ? s1 : s2) = -1;

    LinearMap<QuadExt> M{lines[0].u, lines[0].v, lines[1].u, lines[1].v};
    if (w) {
        QuadExt d1 = QuadExt(s1) * detail::quad_ipow(*w, u);
        QuadExt d2 = QuadExt(s2) * detail::quad_ipow(*w, v);
        LinearMap<QuadExt> A = M.inverse() * LinearMap<QuadExt>::diagonal(d1, d2);
        if (!(pullback(detail::to_quad(h), A) == detail::to_quad(BinaryForm<Rational>::monomial(tau, nf.k))))
            throw std::logic_error("monomial_normal_form: certification failed");
        bool rational = A.a11.is_rational() && A.a12.is_rational() && A.a21.is_rational() && A.a22.is_rational();
        if (rational)
            nf.rational_map = LinearMap<Rational>{A.a11.a, A.a12.a, A.a21.a, A.a22.a};
        else
            nf.quadratic_map = A;
        return nf;
    }

    // scale not expressible in the quadratic tower: numeric normalizer
    double wd = std::pow(to_double(absV), 1.0 / double(g));
    double d1 = s1 * std::pow(wd, double(u)), d2 = s2 * std::pow(wd, double(v));
    LinearMap<double> Md{to_double(M.a11), to_double(M.a12), to_double(M.a21), to_double(M.a22)};
    LinearMap<double> A = Md.inverse() * LinearMap<double>::diagonal(d1, d2);
    BinaryForm<double> hd(tau, [&] {
        std::vector<double> c;
        for (const auto& x : h.coeffs()) c.push_back(to_double(x));
        return c;
    }());
    auto diff = pullback(hd, A) - BinaryForm<double>::monomial(tau, nf.k);
    for (const auto& c : diff.coeffs()) nf.approx_residual = std::max(nf.approx_residual, std::abs(c));
    nf.approx_map = A;
    return nf;
}

enum class CurveClass { Special, HyperbolicNotSpecial, NotHyperbolic };

inline const char* curve_class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Special: return "special";
        case CurveClass::HyperbolicNotSpecial: return "hyperbolic-not-special";
        case CurveClass::NotHyperbolic: return "not-hyperbolic";
    }
    return "?";
}

struct Classification {
    CurveClass verdict = CurveClass::NotHyperbolic;
    RealFactorization factorization;
    std::vector<SingularLine> singular;
    std::vector<ComponentDescriptor> all_components;
    std::vector<ComponentDescriptor> hyperbolic;
    std::optional<Point2<Rational>> hyperbolic_witness;  // rational direction with a hyperbolic point
    std::optional<MonomialNormalForm> normal_form;       // verdict == Special
    std::optional<GroupStructure> group;                 // verdict == Special
};

inline Classification classify(const BinaryForm<Rational>& h) {
    if (h.degree() < 3) throw std::invalid_argument("classify: degree must be >= 3");
    if (h.is_zero()) throw std::invalid_argument("classify: zero form");
    Classification out;
    out.factorization = factor_real(h);
    out.singular = singular_directions(h);
    out.all_components = components(h);
    out.hyperbolic = hyperbolic_components(h);
    if (out.hyperbolic.empty()) return out;
    out.hyperbolic_witness = out.hyperbolic.front().sample_direction;
    out.normal_form = monomial_normal_form(h);
    if (out.normal_form) {
        out.verdict = CurveClass::Special;
        out.group = group_structure(h.degree(), out.normal_form->k);
    } else {
        out.verdict = CurveClass::HyperbolicNotSpecial;
    }
    return out;
}

struct EnumerationEntry {
    int tau, k;
    BinaryForm<Rational> form;
    int component_count;
    GroupStructure group;
};

/// The pairwise inequivalent normal forms of one degree: k = 1 .. floor(tau/2).
inline std::vector<EnumerationEntry> enumerate_degree(int tau) {
    if (tau < 3) throw std::invalid_argument("enumerate_degree: degree must be >= 3");
    std::vector<EnumerationEntry> out;
    for (int k = 1; k <= tau / 2; ++k) {
        auto m = BinaryForm<Rational>::monomial(tau, k);
        out.push_back({tau, k, m, int(components(m).size()), group_structure(tau, k)});
    }
    return out;
}

enum class EquivalenceResult { Equivalent, Inequivalent, Undecided };

/// Linear equivalence over the reals, decided through the normal form.
/// Forms that are both hyperbolic-but-not-special are out of scope here.
inline EquivalenceResult equivalent(const BinaryForm<Rational>& h1, const BinaryForm<Rational>& h2) {
    if (h1.degree() != h2.degree()) return EquivalenceResult::Inequivalent;
    auto c1 = classify(h1), c2 = classify(h2);
    if (c1.verdict != c2.verdict) return EquivalenceResult::Inequivalent;
    if (c1.verdict == CurveClass::Special)
        return c1.normal_form->k == c2.normal_form->k ? EquivalenceResult::Equivalent
                                                      : EquivalenceResult::Inequivalent;
    if (c1.verdict == CurveClass::NotHyperbolic &&
        c1.factorization.distinct_real_lines() != c2.factorization.distinct_real_lines())
        return EquivalenceResult::Inequivalent;
    return EquivalenceResult::Undecided;
}

// ---- float backend ----

namespace detail {

inline std::vector<std::complex<double>> durand_kerner(std::vector<double> monic) {
    // monic: ascending coefficients, lead 1 implied dropped? keep full with lead 1
    size_t n = monic.size() - 1;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (size_t i = monic.size(); i-- > 0;) acc = acc * z + monic[i];
        return acc;
    };
    std::vector<std::complex<double>> r(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1, 0);
    for (size_t i = 0; i < n; ++i) {
        p *= seed;
        r[i] = p;
    }
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1, 0);
            for (size_t j = 0; j < n; ++j)
                if (j != i) denom *= r[i] - r[j];
            std::complex<double> step = eval(r[i]) / denom;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    return r;
}

}  // namespace detail

struct FloatLine {
    bool axis = false;
    double t = 0;  // line y = t x, when !axis
    int multiplicity = 0;
};

struct FloatClassification {
    CurveClass verdict = CurveClass::NotHyperbolic;
    int k = 0;
    std::vector<FloatLine> lines;      // real lines of {h = 0} with multiplicities
    LinearMap<double> normalizer{};    // verdict == Special
    double residual = 0;               // max coefficient error of the normalization
};

/// Numeric classification: root clustering stands in for exact factorization.
/// Multiple roots are recovered as cluster centroids (first-order
/// perturbations cancel in the mean) polished by Newton on the appropriate
/// derivative.
inline FloatClassification classify_float(const BinaryForm<double>& h, double eps = 1e-9) {
    int tau = h.degree();
    if (tau < 3) throw std::invalid_argument("classify_float: degree must be >= 3");
    FloatClassification out;
    std::vector<double> c = h.coeffs();
    double cmax = 0;
    for (double x : c) cmax = std::max(cmax, std::abs(x));
    if (cmax == 0) throw std::invalid_argument("classify_float: zero form");
    int degp = tau;
    while (degp >= 0 && std::abs(c[size_t(degp)]) <= eps * cmax) --degp;
    int axis_mult = tau - degp;

    std::vector<FloatLine> lines;
    bool totally_real = true;
    double lead = degp >= 0 ? c[size_t(degp)] : 0;
    if (axis_mult > 0 && degp >= 0) lines.push_back({true, 0, axis_mult});
    auto p = std::vector<double>(c.begin(), c.begin() + degp + 1);
    if (degp >= 1) {
        for (auto& x : p) x /= lead;
        auto roots = detail::durand_kerner(p);
        // greedy clustering by proximity
        double scale = 1.0;
        for (auto z : roots) scale = std::max(scale, std::abs(z));
        // an m-fold root smears into a cluster of radius ~ eps^(1/m); size the
        // radius for the worst case m = deg p
        double radius = scale * std::max(1e-3, 20 * std::pow(2.2e-16, 1.0 / double(degp)));
        std::vector<bool> used(roots.size(), false);
        for (size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            std::vector<size_t> cluster{i};
            used[i] = true;
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (!used[j] && std::abs(roots[j] - roots[i]) < radius) {
                    cluster.push_back(j);
                    used[j] = true;
                }
            std::complex<double> centroid = 0;
            for (size_t j : cluster) centroid += roots[j];
            centroid /= double(cluster.size());
            int m = int(cluster.size());
            if (std::abs(centroid.imag()) > radius) {
                totally_real = false;  // complex pair(s)
                continue;
            }
            // Newton polish on the (m-1)-th derivative, where the root is simple
            double t0 = centroid.real();
            std::vector<double> dm = p;
            for (int d = 0; d < m - 1; ++d) {
                std::vector<double> nd(dm.size() - 1);
                for (size_t j = 1; j < dm.size(); ++j) nd[j - 1] = dm[j] * double(j);
                dm = std::move(nd);
            }
            auto evald = [](const std::vector<double>& q, double x) {
                double acc = 0;
                for (size_t j = q.size(); j-- > 0;) acc = acc * x + q[j];
                return acc;
            };
            std::vector<double> dd(dm.size() - 1);
            for (size_t j = 1; j < dm.size(); ++j) dd[j - 1] = dm[j] * double(j);
            for (int it = 0; it < 20; ++it) {
                double der = evald(dd, t0);
                if (der == 0) break;
                double step = evald(dm, t0) / der;
                t0 -= step;
                if (std::abs(step) < 1e-15 * (1 + std::abs(t0))) break;
            }
            lines.push_back({false, t0, m});
        }
    }
    out.lines = lines;

    // hyperbolicity by circle sampling
    auto dets = hessian_det(h);
    bool any_hyp = false;
    for (int i = 0; i < 2048; ++i) {
        double th = 2 * M_PI * i / 2048;
        double x = std::cos(th), y = std::sin(th);
        if (h(x, y) > 0 && dets(x, y) < 0) any_hyp = true;
    }
    if (!any_hyp) return out;
    out.verdict = CurveClass::HyperbolicNotSpecial;

    if (lines.size() != 2 || !totally_real) return out;
    if (lines[0].multiplicity < lines[1].multiplicity) std::swap(lines[0], lines[1]);
    long m1 = lines[0].multiplicity, m2 = lines[1].multiplicity;
    if (m1 + m2 != tau) return out;
    out.k = int(m2);

    double V = 1.0 / lead;
    if (m1 % 2 == 0 && m2 % 2 == 0 && V < 0) return out;
    long g = std::gcd(m1, m2), u, v;
    detail::ext_gcd(m1, m2, u, v);
    double w = std::pow(std::abs(V), 1.0 / double(g));
    double s1 = 1, s2 = 1;
    if (V < 0) (m1 % 2 == 1 ? s1 : s2) = -1;
    double d1 = s1 * std::pow(w, double(u)), d2 = s2 * std::pow(w, double(v));
    auto row = [](const FloatLine& l) {
        return l.axis ? std::array<double, 2>{1, 0} : std::array<double, 2>{-l.t, 1};
    };
    auto r1 = row(lines[0]), r2 = row(lines[1]);
    LinearMap<double> M{r1[0], r1[1], r2[0], r2[1]};
    LinearMap<double> A = M.inverse() * LinearMap<double>::diagonal(d1, d2);
    auto diff = pullback(h, A) - BinaryForm<double>::monomial(tau, out.k);
    double res = 0;
    for (double x : diff.coeffs()) res = std::max(res, std::abs(x));
    out.residual = res;
    if (res <= std::sqrt(eps) * (1 + cmax)) {
        out.verdict = CurveClass::Special;
        out.normalizer = A;
    }
    return out;
}

}  // namespace homcurve
