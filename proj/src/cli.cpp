/*
   Copyright 2026 The spheredeg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "spheredeg/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spheredeg/degree.hpp"
#include "spheredeg/errors.hpp"
#include "spheredeg/parser.hpp"
#include "spheredeg/verify.hpp"

namespace spheredeg::cli {

namespace {

using json = nlohmann::ordered_json;

json complex_pair(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

struct RunOutcome {
    DegreeReport report;
    std::optional<bool> common_zero_certified;
    std::optional<double> oracle_value;
    int exit_code = 0;
};

DegreeOptions build_options(const Config& cfg) {
    DegreeOptions opt;
    opt.force_numeric = cfg.method == Config::MethodChoice::numeric;
    opt.allow_fallback = cfg.method == Config::MethodChoice::automatic;
    if (cfg.samples) opt.winding.initial_samples = *cfg.samples;
    if (cfg.max_depth) opt.winding.max_depth = *cfg.max_depth;
    if (cfg.min_modulus) opt.winding.min_modulus = *cfg.min_modulus;
    return opt;
}

RunOutcome run_pipeline(const Config& cfg, const PolyMapQ& map, std::ostream& err) {
    RunOutcome outcome;
    DegreeOptions opt = build_options(cfg);

    if (cfg.check_common_zeros) {
        opt.certify = true;
        try {
            outcome.report = degree_of(map, opt);
            outcome.common_zero_certified = true;
        } catch (const CommonZeroSuspected& e) {
            err << "warning: " << e.what() << "\n"
                << "warning: reporting the degree with the no-common-zeros hypothesis "
                   "uncertified\n";
            outcome.common_zero_certified = false;
            outcome.exit_code = 2;
            opt.certify = false;
            outcome.report = degree_of(map, opt);
        }
    } else {
        outcome.report = degree_of(map, opt);
    }

    if (cfg.oracle) {
        AreaOracleConfig ocfg;
        ocfg.grid = cfg.oracle_grid;
        try {
            outcome.oracle_value =
                degree_via_area_integral(to_floating(map.f), to_floating(map.g), ocfg);
        } catch (const GridPointSingular& e) {
            err << "warning: area-integral oracle skipped: " << e.what() << "\n";
        }
    }
    return outcome;
}

void print_text(const RunOutcome& o, std::ostream& out) {
    const DegreeReport& r = o.report;
    out << "degree: " << r.degree << "\n";
    out << "method: " << method_name(r.method) << "\n";
    if (r.d) out << "d: " << *r.d << "\n";
    if (r.M) out << "M: " << *r.M << "\n";
    if (r.roots_inside) out << "roots inside unit disk: " << *r.roots_inside << "\n";
    if (r.tilde_T) out << "associated polynomial: " << r.tilde_T->str() << "\n";
    if (r.diagnostics.min_T_on_circle)
        out << "min |T| on unit circle (certified): " << *r.diagnostics.min_T_on_circle << "\n";
    out << "winding refinement depth: " << r.diagnostics.winding_refinement_depth << "\n";
    if (r.diagnostics.mobius_constant) {
        const auto c = *r.diagnostics.mobius_constant;
        out << "limit at infinity: " << c.real() << (c.imag() < 0 ? "" : "+") << c.imag()
            << "i\n";
    }
    if (o.common_zero_certified)
        out << "common zeros: " << (*o.common_zero_certified ? "none (certified)" : "uncertified")
            << "\n";
    if (o.oracle_value) out << "area-integral oracle: " << *o.oracle_value << "\n";
}

void print_json(const RunOutcome& o, std::ostream& out) {
    const DegreeReport& r = o.report;
    json doc;
    doc["degree"] = r.degree;
    doc["method"] = std::string(method_name(r.method));
    if (r.d) doc["d"] = *r.d;
    if (r.M) doc["M"] = *r.M;
    if (r.roots_inside) doc["roots_inside"] = *r.roots_inside;
    if (r.tilde_T) {
        json coeffs = json::array();
        for (const auto& c : r.tilde_T->coeffs()) coeffs.push_back(complex_pair(c));
        doc["tilde_T_coefficients"] = std::move(coeffs);
    }
    json diag;
    if (r.diagnostics.min_T_on_circle) diag["min_T_on_circle"] = *r.diagnostics.min_T_on_circle;
    diag["refinement_depth"] = r.diagnostics.winding_refinement_depth;
    if (o.common_zero_certified) diag["common_zero_certified"] = *o.common_zero_certified;
    if (o.oracle_value) diag["oracle_value"] = *o.oracle_value;
    doc["diagnostics"] = std::move(diag);
    out << doc.dump(2) << "\n";
}

}  // namespace

int run(const Config& cfg, std::ostream& out, std::ostream& err) {
    PolyMapQ map;
    try {
        map.f = parse_bipoly(cfg.f_expr);
        map.g = parse_bipoly(cfg.g_expr);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    map.radius_override = cfg.radius;

    try {
        const RunOutcome outcome = run_pipeline(cfg, map, err);
        if (cfg.output == Config::OutputFormat::json)
            print_json(outcome, out);
        else
            print_text(outcome, out);
        return outcome.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Topological degree of a self-map of the Riemann sphere given as f/g"};

    app.add_option("--f", cfg.f_expr, "numerator expression in z, conj(z)")->required();
    app.add_option("--g", cfg.g_expr, "denominator expression in z, conj(z)")->required();

    std::string method = "auto";
    app.add_option("--method", method, "auto | theorem2 | numeric")
        ->check(CLI::IsMember({"auto", "theorem2", "numeric"}));
    double radius = 0.0;
    auto* radius_opt = app.add_option("--radius", radius, "contour radius M for the numeric path");
    app.add_flag("--check-common-zeros,!--no-check-common-zeros", cfg.check_common_zeros,
                 "certify that f and g share no zeros (default on)");
    app.add_flag("--oracle", cfg.oracle, "also run the area-integral degree oracle");
    app.add_option("--oracle-grid", cfg.oracle_grid, "oracle quadrature cells per axis");
    std::string output = "text";
    app.add_option("--output", output, "text | json")->check(CLI::IsMember({"text", "json"}));
    int samples = 0, max_depth = 0;
    double min_modulus = 0.0;
    auto* samples_opt = app.add_option("--samples", samples, "initial loop samples");
    auto* depth_opt = app.add_option("--max-depth", max_depth, "max bisections per arc");
    auto* modulus_opt = app.add_option("--min-modulus", min_modulus, "loop modulus floor");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (method == "theorem2") cfg.method = Config::MethodChoice::theorem2;
    else if (method == "numeric") cfg.method = Config::MethodChoice::numeric;
    cfg.output = output == "json" ? Config::OutputFormat::json : Config::OutputFormat::text;
    if (*radius_opt) cfg.radius = radius;
    if (*samples_opt) cfg.samples = samples;
    if (*depth_opt) cfg.max_depth = max_depth;
    if (*modulus_opt) cfg.min_modulus = min_modulus;

    return run(cfg, out, err);
}

}  // namespace spheredeg::cli
