#pragma once

// SVG rendering of the level set {h = 1}. Each connected component becomes
// one <g> element carrying data-component-index / data-hyperbolic attributes,
// with its visible trace as <polyline> children; the arc is swept in angle and
// lifted radially by h(u)^(-1/tau).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "homcurve/hyperbolicity.hpp"

namespace homcurve {

namespace detail {

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace detail

/// Render the components of {h = 1} into an SVG 1.1 document covering
/// [-range, range]^2 in curve coordinates (y axis pointing up).
template <class R>
std::string render_svg(const BinaryForm<R>& h, const std::vector<ComponentDescriptor>& components,
                       double range = 3.0, int samples_per_arc = 512) {
    const double W = 640.0;                 // canvas size in pixels
    const double scale = W / (2.0 * range);  // curve units -> pixels
    auto px = [&](double x) { return (x + range) * scale; };
    auto py = [&](double y) { return (range - y) * scale; };
    const double margin = 0.05 * range;  // keep strokes that exit just past the frame

    int tau = h.degree();
    auto heval = [&](double c, double s) {
        double acc = 0;
        for (int k = 0; k <= tau; ++k)
            acc += to_double(h.coeff(k)) * std::pow(c, tau - k) * std::pow(s, k);
        return acc;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::svg_coord(W) +
           "\" height=\"" + detail::svg_coord(W) + "\" viewBox=\"0 0 " + detail::svg_coord(W) + " " +
           detail::svg_coord(W) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<line x1=\"0\" y1=\"" + detail::svg_coord(py(0)) + "\" x2=\"" + detail::svg_coord(W) + "\" y2=\"" +
           detail::svg_coord(py(0)) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + detail::svg_coord(px(0)) + "\" y1=\"0\" x2=\"" + detail::svg_coord(px(0)) +
           "\" y2=\"" + detail::svg_coord(W) + "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    for (size_t ci = 0; ci < components.size(); ++ci) {
        const auto& comp = components[ci];
        double a0, a1;
        if (comp.arc.full_circle) {
            a0 = 0.0;
            a1 = 2.0 * M_PI;
        } else {
            a0 = comp.arc.start.angle();
            a1 = comp.arc.end.angle();
            while (a1 <= a0) a1 += 2.0 * M_PI;
            double span = a1 - a0;
            a0 += 1e-6 * span;  // back off the boundary rays, where the lift diverges
            a1 -= 1e-6 * span;
        }

        const char* color = comp.hyperbolic ? "#1f5fa8" : (comp.mixed ? "#c0392b" : "#8a8a8a");
        out += "<g data-component-index=\"" + std::to_string(ci) + "\" data-hyperbolic=\"" +
               (comp.hyperbolic ? "true" : "false") + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\">\n";

        std::vector<std::pair<double, double>> run;
        auto flush = [&] {
            if (run.size() >= 2) {
                out += "<polyline points=\"";
                for (size_t i = 0; i < run.size(); ++i) {
                    if (i) out += ' ';
                    out += detail::svg_coord(px(run[i].first)) + "," + detail::svg_coord(py(run[i].second));
                }
                out += "\"/>\n";
            }
            run.clear();
        };

        int n = comp.arc.full_circle ? samples_per_arc : samples_per_arc - 1;
        for (int i = 0; i < samples_per_arc; ++i) {
            double th = a0 + (a1 - a0) * double(i) / double(n);
            double c = std::cos(th), s = std::sin(th);
            double hv = heval(c, s);
            if (!(hv > 0)) {
                flush();
                continue;
            }
            double rho = std::pow(hv, -1.0 / double(tau));
            double x = rho * c, y = rho * s;
            if (std::abs(x) > range + margin || std::abs(y) > range + margin || !std::isfinite(rho)) {
                flush();
                continue;
            }
            run.emplace_back(x, y);
        }
        flush();
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace homcurve
