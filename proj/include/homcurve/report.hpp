#pragma once

// JSON reports, schema "report_v1". Every numeric leaf is an object
// {"value": ..., "type": "exact" | "approx"}; exact rationals are rendered as
// fraction strings so the report round-trips without loss.

#include <string>

#include "json.hpp"

#include "homcurve/centroaffine.hpp"
#include "homcurve/classify.hpp"
#include "homcurve/parse.hpp"

namespace homcurve {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json exact_num(const Rational& r) { return Json{{"value", coeff_to_string(r)}, {"type", "exact"}}; }
inline Json exact_num(int v) { return Json{{"value", v}, {"type", "exact"}}; }
inline Json approx_num(double v) { return Json{{"value", v}, {"type", "approx"}}; }

inline Json matrix_json(const LinearMap<Rational>& a) {
    return Json::array({exact_num(a.a11), exact_num(a.a12), exact_num(a.a21), exact_num(a.a22)});
}

inline Json quad_entry(const QuadExt& q) {
    return Json{{"value", {{"a", coeff_to_string(q.a)}, {"b", coeff_to_string(q.b)}, {"radicand", q.d.str()}}},
                {"type", "exact"}};
}

inline Json direction_json(const ProjectiveDirection& d) {
    Json j;
    if (d.kind == ProjectiveDirection::Kind::AxisPoint) {
        j["kind"] = "axis";
        j["lift"] = d.sign_lift;
    } else {
        j["kind"] = "chart";
        j["lift"] = d.sign_lift;
        if (d.parameter.is_exact())
            j["t"] = exact_num(*d.parameter.exact_point);
        else {
            j["t"] = approx_num(to_double(d.parameter.midpoint()));
            j["isolating_interval"] =
                Json::array({coeff_to_string(d.parameter.lo), coeff_to_string(d.parameter.hi)});
        }
    }
    return j;
}

inline Json normalizer_json(const MonomialNormalForm& nf) {
    Json j;
    if (nf.rational_map) {
        j["field"] = "rational";
        j["matrix"] = matrix_json(*nf.rational_map);
    } else if (nf.quadratic_map) {
        j["field"] = "quadratic";
        j["matrix"] = Json::array({quad_entry(nf.quadratic_map->a11), quad_entry(nf.quadratic_map->a12),
                                   quad_entry(nf.quadratic_map->a21), quad_entry(nf.quadratic_map->a22)});
    } else {
        j["field"] = "approx";
        const auto& a = *nf.approx_map;
        j["matrix"] = Json::array({approx_num(a.a11), approx_num(a.a12), approx_num(a.a21), approx_num(a.a22)});
        j["residual"] = approx_num(nf.approx_residual);
    }
    return j;
}

}  // namespace detail

/// Full report for the exact backend.
inline Json build_report(const BinaryForm<Rational>& h, const Classification& c, double epsilon,
                         double elapsed_ms) {
    Json rep;
    rep["schema"] = "report_v1";
    rep["input"] = {{"polynomial", form_to_string(h)}, {"degree", h.degree()}, {"backend", "exact"}};

    std::vector<BoundaryBehaviour> boundaries;
    bool singular_at_infinity = false;
    for (const auto& comp : c.all_components) {
        boundaries.push_back(boundary_behavior(h, comp));
        if (comp.hyperbolic && boundaries.back().label == BoundaryLabel::SingularAtInfinity)
            singular_at_infinity = true;
    }

    Json verdict;
    verdict["class"] = curve_class_name(c.verdict);
    if (c.normal_form) {
        verdict["k"] = c.normal_form->k;
        verdict["normalizer"] = detail::normalizer_json(*c.normal_form);
    }
    verdict["component_count"] = int(c.all_components.size());
    verdict["hyperbolic_component_count"] = int(c.hyperbolic.size());
    if (c.group) verdict["group"] = group_label_name(c.group->label);
    verdict["singular_at_infinity"] = singular_at_infinity;
    if (c.hyperbolic_witness)
        verdict["hyperbolic_witness"] =
            Json::array({detail::exact_num(c.hyperbolic_witness->x), detail::exact_num(c.hyperbolic_witness->y)});
    rep["verdict"] = verdict;

    Json comps = Json::array();
    for (size_t i = 0; i < c.all_components.size(); ++i) {
        const auto& comp = c.all_components[i];
        Json cj;
        cj["index"] = int(i);
        cj["hyperbolic"] = comp.hyperbolic;
        cj["mixed"] = comp.mixed;
        Json arc;
        arc["full_circle"] = comp.arc.full_circle;
        if (!comp.arc.full_circle) {
            arc["start"] = detail::direction_json(comp.arc.start);
            arc["end"] = detail::direction_json(comp.arc.end);
        }
        cj["arc"] = arc;
        cj["sample_direction"] =
            Json::array({detail::exact_num(comp.sample_direction.x), detail::exact_num(comp.sample_direction.y)});
        cj["sample_point"] =
            Json::array({detail::approx_num(comp.sample_point[0]), detail::approx_num(comp.sample_point[1])});
        comps.push_back(cj);
    }
    rep["components"] = comps;

    Json sym;
    auto basis = infinitesimal_symmetries(h);
    sym["dimension"] = int(basis.size());
    Json bj = Json::array();
    for (const auto& b : basis) bj.push_back(detail::matrix_json(b.matrix));
    sym["basis"] = bj;
    if (c.group) {
        Json gens = Json::array();
        for (const auto& g : c.group->generators) gens.push_back(detail::matrix_json(g));
        sym["group"] = {{"label", group_label_name(c.group->label)}, {"generators", gens}};
    }
    rep["symmetry"] = sym;

    Json geom;
    Json bb = Json::array();
    for (size_t i = 0; i < boundaries.size(); ++i) {
        const auto& b = boundaries[i];
        Json e;
        e["component"] = int(i);
        e["label"] = b.label == BoundaryLabel::SingularAtInfinity ? "singular-at-infinity" : "regular";
        Json ws = Json::array();
        for (const auto& w : b.witnesses) ws.push_back(detail::direction_json(w));
        e["witnesses"] = ws;
        bb.push_back(e);
    }
    geom["boundary"] = bb;
    Json sing = Json::array();
    for (const auto& s : c.singular) {
        Json e;
        e["kind"] = s.axis ? "axis" : "chart";
        if (!s.axis) {
            if (s.root.is_exact())
                e["t"] = detail::exact_num(*s.root.exact_point);
            else
                e["t"] = detail::approx_num(to_double(s.root.midpoint()));
        }
        sing.push_back(e);
    }
    geom["singular_directions"] = sing;
    rep["geometry"] = geom;

    rep["diagnostics"] = {{"backend", "exact"},
                          {"epsilon", detail::approx_num(epsilon)},
                          {"elapsed_ms", detail::approx_num(elapsed_ms)}};
    return rep;
}

/// Report for the float backend: verdict and recovered lines; the exact-only
/// blocks (arcs, symmetry basis, boundary) are omitted.
inline Json build_report(const BinaryForm<double>& h, const FloatClassification& c, double epsilon,
                         double elapsed_ms) {
    Json rep;
    rep["schema"] = "report_v1";
    rep["input"] = {{"polynomial", form_to_string(h)}, {"degree", h.degree()}, {"backend", "float"}};

    // component count by dense sign sampling with a relative dip threshold
    const size_t n = 10000;
    int runs = 0;
    std::vector<int> pos(n);
    double hmax = 0;
    std::vector<double> vals(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2 * M_PI * double(i) / double(n);
        vals[i] = h(std::cos(th), std::sin(th));
        hmax = std::max(hmax, std::abs(vals[i]));
    }
    for (size_t i = 0; i < n; ++i) pos[i] = vals[i] > 1e-5 * hmax ? 1 : 0;
    for (size_t i = 0; i < n; ++i)
        if (pos[i] == 1 && pos[(i + n - 1) % n] == 0) ++runs;
    if (runs == 0 && pos[0] == 1) runs = 1;

    Json verdict;
    verdict["class"] = curve_class_name(c.verdict);
    if (c.verdict == CurveClass::Special) {
        verdict["k"] = c.k;
        verdict["normalizer"] = {
            {"field", "approx"},
            {"matrix", Json::array({detail::approx_num(c.normalizer.a11), detail::approx_num(c.normalizer.a12),
                                    detail::approx_num(c.normalizer.a21), detail::approx_num(c.normalizer.a22)})},
            {"residual", detail::approx_num(c.residual)}};
        verdict["group"] = group_label_name(group_structure(h.degree(), c.k).label);
    }
    verdict["component_count"] = runs;
    rep["verdict"] = verdict;

    Json lines = Json::array();
    for (const auto& l : c.lines) {
        Json e;
        e["kind"] = l.axis ? "axis" : "chart";
        if (!l.axis) e["t"] = detail::approx_num(l.t);
        e["multiplicity"] = l.multiplicity;
        lines.push_back(e);
    }
    rep["lines"] = lines;

    rep["diagnostics"] = {{"backend", "float"},
                          {"epsilon", detail::approx_num(epsilon)},
                          {"elapsed_ms", detail::approx_num(elapsed_ms)}};
    return rep;
}

}  // namespace homcurve
