// Command-line front end.
//
// Exit codes: 0 success, 2 malformed polynomial input, 3 constraint violation
// (degree < 3, unknown backend, or a literal the chosen backend cannot hold).

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "homcurve/classify.hpp"
#include "homcurve/parse.hpp"
#include "homcurve/plot.hpp"
#include "homcurve/report.hpp"

namespace {

using namespace homcurve;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CommonOpts {
    std::string polynomial;
    std::string backend = "exact";
    double epsilon = 1e-9;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool wants_poly = true) {
    if (wants_poly) cmd->add_option("polynomial", o.polynomial, "binary form, e.g. 'x^2*y'")->required();
    cmd->add_option("--backend", o.backend, "arithmetic backend: exact | float")->capture_default_str();
    cmd->add_option("--epsilon", o.epsilon, "numeric tolerance (float backend)")->capture_default_str();
    cmd->add_flag("--json", o.json, "emit a report_v1 JSON document");
}

void check_backend(const std::string& b) {
    if (b != "exact" && b != "float") throw BackendError("unknown backend '" + b + "'");
}

void print_summary(const Json& rep) {
    const auto& v = rep["verdict"];
    std::cout << "polynomial:  " << rep["input"]["polynomial"].get<std::string>() << "\n";
    std::cout << "degree:      " << rep["input"]["degree"].get<int>() << "\n";
    std::cout << "class:       " << v["class"].get<std::string>() << "\n";
    if (v.contains("k")) std::cout << "normal form: x^" << rep["input"]["degree"].get<int>() - v["k"].get<int>()
                                   << "*y^" << v["k"].get<int>() << "  (k = " << v["k"].get<int>() << ")\n";
    std::cout << "components:  " << v["component_count"].get<int>() << "\n";
    if (v.contains("group")) std::cout << "group:       " << v["group"].get<std::string>() << "\n";
    if (v.contains("singular_at_infinity"))
        std::cout << "singular at infinity: " << (v["singular_at_infinity"].get<bool>() ? "yes" : "no") << "\n";
}

int run_analyze(const CommonOpts& o, bool full) {
    check_backend(o.backend);
    auto t0 = Clock::now();
    Json rep;
    if (o.backend == "float") {
        auto h = parse_form<double>(o.polynomial);
        auto c = classify_float(h, o.epsilon);
        rep = build_report(h, c, o.epsilon, ms_since(t0));
    } else {
        auto h = parse_form<Rational>(o.polynomial);
        auto c = classify(h);
        rep = build_report(h, c, o.epsilon, ms_since(t0));
    }
    if (!full) {  // `classify`: verdict block only
        Json small;
        small["schema"] = rep["schema"];
        small["input"] = rep["input"];
        small["verdict"] = rep["verdict"];
        rep = small;
    }
    if (o.json)
        std::cout << rep.dump(2) << "\n";
    else
        print_summary(rep);
    return 0;
}

int run_enumerate(int degree, bool json) {
    auto entries = enumerate_degree(degree);  // throws invalid_argument if degree < 3
    if (json) {
        Json arr = Json::array();
        for (const auto& e : entries)
            arr.push_back({{"k", e.k},
                           {"polynomial", form_to_string(e.form)},
                           {"component_count", e.component_count},
                           {"group", group_label_name(e.group.label)}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            std::cout << "k=" << e.k << "  " << form_to_string(e.form) << "  components=" << e.component_count
                      << "  group=" << group_label_name(e.group.label) << "\n";
    }
    return 0;
}

int run_plot(const CommonOpts& o, const std::string& out_path, double range) {
    check_backend(o.backend);
    auto h = parse_form<Rational>(o.polynomial);
    if (h.degree() < 3) throw std::invalid_argument("plot: degree must be >= 3");
    auto comps = components(h);
    std::string svg = render_svg(h, comps, range);
    if (out_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 1;
        }
        f << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of hyperbolic binary homogeneous polynomials"};
    app.require_subcommand(1);

    CommonOpts analyze_opts, classify_opts, plot_opts;
    int enum_degree = 0;
    bool enum_json = false;
    std::string out_path;
    double range = 3.0;

    auto* analyze = app.add_subcommand("analyze", "full report on one polynomial");
    add_common(analyze, analyze_opts);
    auto* cls = app.add_subcommand("classify", "verdict and normal form only");
    add_common(cls, classify_opts);
    auto* enumerate = app.add_subcommand("enumerate", "normal forms of one degree");
    enumerate->add_option("--degree", enum_degree, "polynomial degree (>= 3)")->required();
    enumerate->add_flag("--json", enum_json, "emit JSON");
    auto* plot = app.add_subcommand("plot", "render {h=1} as SVG");
    add_common(plot, plot_opts);
    plot->add_option("--out", out_path, "output file (stdout if omitted)");
    plot->add_option("--range", range, "half-width of the plotted square")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(analyze_opts, true);
        if (cls->parsed()) return run_analyze(classify_opts, false);
        if (enumerate->parsed()) return run_enumerate(enum_degree, enum_json);
        if (plot->parsed()) return run_plot(plot_opts, out_path, range);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const homcurve::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const homcurve::BackendError& e) {
        std::cerr << "backend error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
