#pragma once

// Pointwise and global hyperbolicity, and the connected components of {h=1}
// as arcs of the direction circle.
//
// Index space is the unit circle (double cover of the projective line),
// traversed counterclockwise starting at (0,-1):
//   (0,-1)  ->  { +(1,t), t ascending }  ->  (0,1)  ->  { -(1,t), t ascending }
// Arc boundaries are exact root data, never floating angles.

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homcurve/binary_form.hpp"
#include "homcurve/realroots.hpp"

namespace homcurve {

struct ProjectiveDirection {
    enum class Kind { XChart, AxisPoint };

    Kind kind = Kind::XChart;
    int sign_lift = 1;      // XChart: direction = sign_lift*(1,t); AxisPoint: (0, sign_lift)
    RootInterval parameter;  // XChart parameter t
    std::optional<RPoly> defining_poly;  // square-free witness polynomial for irrational t

    static ProjectiveDirection axis(int lift) { return {Kind::AxisPoint, lift, {}, std::nullopt}; }

    static ProjectiveDirection chart(int lift, RootInterval t, std::optional<RPoly> poly = std::nullopt) {
        return {Kind::XChart, lift, std::move(t), std::move(poly)};
    }

    bool is_rational() const { return kind == Kind::AxisPoint || parameter.is_exact(); }

    /// Approximate unit vector; exact directions are represented exactly by
    /// (kind, sign_lift, parameter), this is for output and quadrature only.
    std::array<double, 2> unit() const {
        if (kind == Kind::AxisPoint) return {0.0, double(sign_lift)};
        double t = to_double(parameter.midpoint());
        double n = std::sqrt(1.0 + t * t);
        return {sign_lift / n, sign_lift * t / n};
    }

    double angle() const {
        auto u = unit();
        return std::atan2(u[1], u[0]);
    }
};

struct Arc {
    ProjectiveDirection start, end;  // counterclockwise from start to end
    bool full_circle = false;
    std::vector<int> det_sign_pattern;  // sign of det d2h on the interior segments
    bool det_zero_interior = false;     // det d2h vanishes at an interior direction
};

struct ComponentDescriptor {
    Arc arc;
    Point2<Rational> sample_direction;  // rational interior direction of the arc
    std::array<double, 2> sample_point;  // sample_direction / h(u)^(1/tau), approximate
    bool hyperbolic = false;  // det d2h < 0 on the whole open arc
    bool mixed = false;       // det d2h changes sign on the arc
};

/// h(p) > 0 and det d2h_p < 0. In two variables this is exactly the
/// Minkowski-signature condition on -d2h_p.
template <class R>
bool is_hyperbolic_point(const BinaryForm<R>& h, const Point2<R>& p) {
    if (is_zero(p.x) && is_zero(p.y)) throw std::invalid_argument("is_hyperbolic_point: zero vector");
    return sign(h(p)) > 0 && sign(hessian_det(h)(p)) < 0;
}

struct CircleEvent {
    ProjectiveDirection dir;
    bool h_zero = false;
    int h_multiplicity = 0;
    bool det_zero = false;
};

struct CircleSegment {
    int sign_h = 0;
    int sign_det = 0;
    Point2<Rational> sample;  // rational direction in the open segment
};

/// Exact partition of the direction circle by the zeros of h and det d2h.
/// segments[i] is the open arc between events[i] and events[(i+1) % n];
/// with no events there is a single full-circle segment.
struct CircleSignData {
    std::vector<CircleEvent> events;
    std::vector<CircleSegment> segments;
    bool det_identically_zero = false;
};

inline CircleSignData circle_sign_data(const BinaryForm<Rational>& h) {
    if (h.is_zero()) throw std::invalid_argument("circle_sign_data: zero form");
    int tau = h.degree();
    if (tau < 2) throw std::invalid_argument("circle_sign_data: degree must be >= 2");
    auto Q = hessian_det(h);

    RPoly p = dehomogenize(h, Chart::X);
    RPoly q = dehomogenize(Q, Chart::X);
    CircleSignData out;
    out.det_identically_zero = Q.is_zero();

    RPoly p_sf = square_free_part(p);
    RPoly q_sf = out.det_identically_zero ? RPoly::constant(Rational(1)) : square_free_part(q);
    RPoly S = square_free_part(p_sf * q_sf);

    auto roots = S.degree() >= 1 ? isolate_roots(S) : std::vector<RootInterval>{};
    auto p_dec = square_free_decomposition(p);

    // classify each circle-crossing parameter
    struct RootInfo {
        RootInterval iv;
        bool of_p = false, of_q = false;
        int p_mult = 0;
        std::optional<RPoly> witness;
    };
    auto root_of = [](const RPoly& f, const RootInterval& iv) {
        if (f.degree() < 1) return false;
        if (iv.is_exact()) return sign(f(*iv.exact_point)) == 0;
        auto c = sturm_count(square_free_part(f), iv.lo, iv.hi);
        return !c.endpoint_is_root && c.count == 1;
    };
    std::vector<RootInfo> infos;
    for (const auto& r : roots) {
        RootInfo ri{r, false, false, 0, std::nullopt};
        if (root_of(p_sf, r)) {
            ri.of_p = true;
            for (const auto& [f, m] : p_dec)
                if (root_of(f, r)) {
                    ri.p_mult = m;
                    if (!r.is_exact()) ri.witness = f;
                }
        }
        if (!out.det_identically_zero && root_of(q_sf, r)) {
            ri.of_q = true;
            if (!r.is_exact() && !ri.witness) ri.witness = q_sf;
        }
        infos.push_back(std::move(ri));
    }

    // axis data: h(0,s) = f_tau s^tau, det d2h(0,s) = Q_last s^(2 tau - 4)
    bool axis_h_zero = is_zero(h.coeff(tau));
    bool axis_q_zero = !out.det_identically_zero && is_zero(Q.coeff(Q.degree()));
    bool axis_event = axis_h_zero || axis_q_zero;
    int axis_h_mult = tau - (p.is_zero() ? 0 : p.degree());

    Rational B = cauchy_root_bound(p_sf);
    if (!out.det_identically_zero) B = std::max(B, cauchy_root_bound(q_sf));
    B = B + 1;

    // in-chart samples: below, between and above the crossing parameters
    std::vector<Rational> samples;
    samples.push_back(-B);
    for (size_t i = 0; i + 1 < infos.size(); ++i) samples.push_back((infos[i].iv.hi + infos[i + 1].iv.lo) / 2);
    samples.push_back(B);

    auto make_event = [&](const RootInfo& ri, int lift) {
        CircleEvent e;
        e.dir = ProjectiveDirection::chart(lift, ri.iv, ri.witness);
        e.h_zero = ri.of_p;
        e.h_multiplicity = ri.p_mult;
        e.det_zero = ri.of_q;
        return e;
    };
    auto axis_ev = [&](int lift) {
        CircleEvent e;
        e.dir = ProjectiveDirection::axis(lift);
        e.h_zero = axis_h_zero;
        e.h_multiplicity = axis_h_zero ? axis_h_mult : 0;
        e.det_zero = axis_q_zero;
        return e;
    };
    auto seg = [&](const Rational& t, int lift) {
        CircleSegment s;
        s.sample = {Rational(lift), Rational(lift) * t};
        s.sign_h = sign(h(s.sample));
        s.sign_det = out.det_identically_zero ? 0 : sign(Q(s.sample));
        return s;
    };

    if (infos.empty() && !axis_event) {
        out.segments.push_back(seg(Rational(0), 1));
        return out;
    }

    // Counterclockwise interleaving starting at (0,-1). segments[i] follows
    // events[i]. The segment after the last chart root either runs up to the
    // axis event or, without one, continues across the axis into the other
    // lift; its sample t = B lies inside it either way.
    size_t m = infos.size();
    for (int lift : {1, -1}) {
        if (axis_event) {
            out.events.push_back(axis_ev(-lift));
            out.segments.push_back(seg(samples.front(), lift));
        }
        for (size_t i = 0; i < m; ++i) {
            out.events.push_back(make_event(infos[i], lift));
            out.segments.push_back(seg(samples[i + 1], lift));
        }
    }
    return out;
}

namespace detail {

inline ComponentDescriptor make_component(const BinaryForm<Rational>& h, const CircleSignData& data,
                                          size_t first_seg, size_t len, bool full_circle) {
    size_t n = data.segments.size();
    ComponentDescriptor c;
    c.arc.full_circle = full_circle;
    if (!full_circle) {
        c.arc.start = data.events[first_seg].dir;
        c.arc.end = data.events[(first_seg + len) % n].dir;
    }
    bool any_pos = false, any_neg = false;
    size_t sample_seg = first_seg;
    bool sample_found = false;
    for (size_t j = 0; j < len; ++j) {
        const auto& s = data.segments[(first_seg + j) % n];
        c.arc.det_sign_pattern.push_back(s.sign_det);
        if (s.sign_det > 0) any_pos = true;
        if (s.sign_det < 0) any_neg = true;
        if (!sample_found && s.sign_det < 0) {
            sample_seg = (first_seg + j) % n;
            sample_found = true;
        }
    }
    // interior events of a positive run all carry a det zero (every circle
    // event is a zero of h or of det d2h, and interior ones are not h-zeros)
    c.arc.det_zero_interior = len > 1;
    c.hyperbolic = len == 1 && any_neg && !any_pos;
    c.mixed = any_pos && any_neg;
    c.sample_direction = data.segments[sample_seg].sample;
    Rational v = h(c.sample_direction);
    double s = std::pow(to_double(v), -1.0 / h.degree());
    c.sample_point = {s * to_double(c.sample_direction.x), s * to_double(c.sample_direction.y)};
    return c;
}

}  // namespace detail

/// One descriptor per connected component of {h=1}, i.e. per maximal arc of
/// directions with h > 0. Empty when h <= 0 everywhere.
inline std::vector<ComponentDescriptor> components(const BinaryForm<Rational>& h) {
    auto data = circle_sign_data(h);
    std::vector<ComponentDescriptor> out;
    size_t n = data.segments.size();
    if (data.events.empty()) {
        if (data.segments[0].sign_h > 0) out.push_back(detail::make_component(h, data, 0, 1, true));
        return out;
    }
    // run starts: positive segments preceded by an h-zero event or by a
    // non-positive segment
    std::vector<size_t> starts;
    for (size_t i = 0; i < n; ++i) {
        if (data.segments[i].sign_h <= 0) continue;
        if (data.events[i].h_zero || data.segments[(i + n - 1) % n].sign_h <= 0) starts.push_back(i);
    }
    if (starts.empty()) {
        // either no positive segment at all, or h > 0 on the whole circle
        // (events are all det zeros)
        bool any_pos = false;
        for (const auto& s : data.segments) any_pos |= s.sign_h > 0;
        if (any_pos) out.push_back(detail::make_component(h, data, 0, n, true));
        return out;
    }
    for (size_t i0 : starts) {
        size_t len = 1;
        while (len < n && data.segments[(i0 + len) % n].sign_h > 0 && !data.events[(i0 + len) % n].h_zero) ++len;
        out.push_back(detail::make_component(h, data, i0, len, false));
    }
    return out;
}

/// Maximal sub-arcs of the h > 0 arcs on which det d2h < 0 throughout: the
/// candidate special homogeneous curves. Within a component, consecutive
/// segments are separated by det zeros, so each negative-det segment is
/// already maximal.
inline std::vector<ComponentDescriptor> hyperbolic_components(const BinaryForm<Rational>& h) {
    auto data = circle_sign_data(h);
    std::vector<ComponentDescriptor> out;
    size_t n = data.segments.size();
    if (data.events.empty()) {
        if (data.segments[0].sign_h > 0 && data.segments[0].sign_det < 0)
            out.push_back(detail::make_component(h, data, 0, 1, true));
        return out;
    }
    for (size_t i = 0; i < n; ++i)
        if (data.segments[i].sign_h > 0 && data.segments[i].sign_det < 0)
            out.push_back(detail::make_component(h, data, i, 1, false));
    return out;
}

namespace detail {

// Linear position of a rational direction in the canonical circle order
// (0,-1) < +(1,t) ascending < (0,1) < -(1,t) ascending.
struct CircleOrderPos {
    int sector;  // 0: (0,-1), 1: +lift chart, 2: (0,1), 3: -lift chart
    Rational t;  // chart parameter, sectors 1 and 3
};

inline CircleOrderPos circle_order_pos(const Point2<Rational>& dir) {
    if (is_zero(dir.x)) return {sign(dir.y) > 0 ? 2 : 0, Rational(0)};
    return {sign(dir.x) > 0 ? 1 : 3, dir.y / dir.x};
}

inline int event_sector(const ProjectiveDirection& d) {
    if (d.kind == ProjectiveDirection::Kind::AxisPoint) return d.sign_lift > 0 ? 2 : 0;
    return d.sign_lift > 0 ? 1 : 3;
}

// True iff the event position is strictly before the rational direction in
// the canonical circle order. The direction is assumed not to coincide with
// the event (callers compare h-zero events against h > 0 directions).
inline bool event_before(const CircleEvent& e, const CircleOrderPos& p) {
    int es = event_sector(e.dir);
    if (es != p.sector) return es < p.sector;
    if (es == 0 || es == 2) return false;  // same axis point: coincident, not before
    RootInterval iv = e.dir.parameter;
    if (iv.is_exact()) return *iv.exact_point < p.t;
    const RPoly* poly = e.dir.defining_poly ? &*e.dir.defining_poly : nullptr;
    while (iv.lo < p.t && p.t < iv.hi && poly) refine_root_interval(*poly, iv);
    if (iv.is_exact()) return *iv.exact_point < p.t;
    return iv.hi <= p.t || (iv.lo < p.t && !(p.t < iv.hi));
}

}  // namespace detail

/// True iff two rational directions with h > 0 lie in the same connected
/// component of {h > 0} on the circle (equivalently, the rays through them
/// meet the same connected component of {h=1}).
inline bool same_positive_arc(const BinaryForm<Rational>& h, const Point2<Rational>& d1,
                              const Point2<Rational>& d2) {
    if (!(sign(h(d1)) > 0) || !(sign(h(d2)) > 0))
        throw std::invalid_argument("same_positive_arc: directions must have h > 0");
    auto data = circle_sign_data(h);
    std::vector<CircleEvent> zeros;
    for (const auto& e : data.events)
        if (e.h_zero) zeros.push_back(e);
    if (zeros.empty()) return true;
    auto gap = [&](const Point2<Rational>& d) {
        auto p = detail::circle_order_pos(d);
        size_t idx = 0;
        for (const auto& e : zeros)
            if (detail::event_before(e, p)) ++idx;
        return idx % zeros.size();
    };
    return gap(d1) == gap(d2);
}

}  // namespace homcurve
