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

#include "spheredeg/degree.hpp"

#include <cmath>
#include <numbers>
#include <type_traits>

#include "spheredeg/errors.hpp"
#include "spheredeg/verify.hpp"

namespace spheredeg {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::theorem2: return "theorem2";
        case Method::theorem2_after_inversion: return "theorem2_after_inversion";
        case Method::theorem2_after_mobius: return "theorem2_after_mobius";
        case Method::numeric_winding: return "numeric_winding";
        case Method::constant_map: return "constant_map";
    }
    return "?";
}

namespace {

constexpr double kProportionalTol = 1e-9;

// c with T_f = c * T_g, or nullopt. Exact coefficients compare exactly.
std::optional<GaussianRational> top_ratio(const BiPolyQ& tf, const BiPolyQ& tg) {
    const auto& [bd, lead] = *tg.terms().begin();
    const GaussianRational c = tf.coeff(bd.p, bd.q) / lead;
    if (c.is_zero()) return std::nullopt;
    if (tf != tg.scaled(c)) return std::nullopt;
    return c;
}

// Floating coefficients: proportional within 1e-9 relative to the top
// component's coefficient scale, so that roundoff-sized strays do not flip
// the decision either way.
std::optional<std::complex<double>> top_ratio(const BiPolyC& tf, const BiPolyC& tg) {
    Bidegree pivot{};
    double best = -1.0;
    for (const auto& [bd, c] : tg.terms())
        if (std::abs(c) > best) {
            best = std::abs(c);
            pivot = bd;
        }
    const std::complex<double> c = tf.coeff(pivot.p, pivot.q) / tg.coeff(pivot.p, pivot.q);

    double scale = 0.0;
    for (const auto& [bd, cf] : tf.terms()) scale = std::max(scale, std::abs(cf));
    for (const auto& [bd, cg] : tg.terms()) scale = std::max(scale, std::abs(c) * std::abs(cg));

    for (const auto& [bd, cf] : tf.terms())
        if (std::abs(cf - c * tg.coeff(bd.p, bd.q)) > kProportionalTol * scale)
            return std::nullopt;
    for (const auto& [bd, cg] : tg.terms())  // terms of tg absent from tf
        if (tf.coeff(bd.p, bd.q) == std::complex<double>(0.0) &&
            std::abs(c * cg) > kProportionalTol * scale)
            return std::nullopt;
    return c;
}

template <class C>
MobiusReduction<C> mobius_reduce_impl(const BiPoly<C>& f, const BiPoly<C>& g) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree())
        throw std::invalid_argument("mobius_reduce requires nonzero f, g of equal degree");
    const int d = f.degree();
    const auto ratio = top_ratio(f.top_component(), g.top_component());
    if (!ratio) throw LimitDoesNotExist();
    // Top-degree terms cancel by construction; drop them explicitly so that
    // floating roundoff cannot keep the degree from falling.
    const BiPoly<C> denominator = (f - g.scaled(*ratio)).without_total_degree(d);
    return {g, denominator, *ratio};
}

double dominance_radius_from_bound(const BiPolyC& f, int d, double min_top_on_circle) {
    const auto norms = homogeneous_coeff_norms(f);
    double radius = 1.0;
    for (int step = 0; step < 1100; ++step) {
        const double top = min_top_on_circle * std::pow(radius, d);
        double tail = 0.0;
        for (const auto& [j, cj] : norms)
            if (j < d) tail += cj * std::pow(radius, j);
        if (top > tail) return radius;
        radius *= 2.0;
    }
    throw TDominanceFailure("radius doubling search did not terminate");
}

// One dominant-numerator step: deg F > deg G; F/G is the original map or an
// equal-degree transform of it with the same degree.
template <class C>
DegreeReport run_branch(const BiPoly<C>& F, const BiPoly<C>& G, Method method,
                        std::optional<std::complex<double>> mobius_c,
                        std::optional<double> radius_override, const DegreeOptions& opt) {
    const int d = F.degree();
    const BiPoly<C> T = F.top_component();
    const UniPoly tilde = associated_poly(T);
    const BiPolyC fc = to_floating(F);
    const BiPolyC gc = to_floating(G);

    DegreeReport rep;
    rep.d = d;
    rep.tilde_T = tilde;
    rep.diagnostics.mobius_constant = mobius_c;

    DiskCountConfig dcfg;
    dcfg.winding = opt.winding;
    dcfg.mode = opt.mode;

    std::optional<RootCountDetails> counted;
    if (!opt.force_numeric) {
        try {
            counted = count_roots_in_disk_details(tilde, dcfg);
        } catch (const RootOnCircle&) {
            if (!opt.allow_fallback || !radius_override)
                throw TDominanceFailure(
                    "the associated polynomial has roots on or numerically on the unit circle; "
                    "supply a contour radius to fall back to the winding-number path");
        }
    }

    if (counted) {
        rep.method = method;
        rep.roots_inside = counted->count.inside;
        rep.degree = counted->count.inside - d;
        rep.M = dominance_radius_from_bound(fc, d, counted->count.min_modulus_on_circle);
        rep.diagnostics.min_T_on_circle = counted->count.min_modulus_on_circle;
        rep.diagnostics.winding_refinement_depth = counted->refinement_depth;
    } else {
        double contour_radius;
        if (radius_override) {
            contour_radius = *radius_override;
        } else {
            // force_numeric without an explicit radius: derive one; this
            // throws TDominanceFailure when no radius is derivable.
            contour_radius = dominance_radius(fc, to_floating(T), opt.mode);
        }
        WindingConfig wcfg = opt.winding;
        wcfg.mode = opt.mode;
        const DegreeReport numeric = numeric_degree(
            [&fc](std::complex<double> z) { return fc.eval(z); },
            [&gc](std::complex<double> z) { return gc.eval(z); }, contour_radius, wcfg);
        rep.method = Method::numeric_winding;
        rep.degree = numeric.degree;
        rep.M = contour_radius;
        rep.diagnostics.winding_refinement_depth = numeric.diagnostics.winding_refinement_depth;
        rep.diagnostics.denominator_min_on_contour =
            numeric.diagnostics.denominator_min_on_contour;
    }
    return rep;
}

// Case dispatch without certification.
template <class C>
DegreeReport dispatch(const PolyMap<C>& spec, const DegreeOptions& opt) {
    const BiPoly<C>& f = spec.f;
    const BiPoly<C>& g = spec.g;

    // Identically 0 or identically infinity: a constant map.
    if (f.is_zero() || g.is_zero()) {
        DegreeReport rep;
        rep.method = Method::constant_map;
        rep.degree = 0;
        return rep;
    }

    const int df = f.degree(), dg = g.degree();
    if (df > dg)
        return run_branch(f, g, Method::theorem2, std::nullopt, spec.radius_override, opt);
    if (dg > df)
        return run_branch(g, f, Method::theorem2_after_inversion, std::nullopt,
                          spec.radius_override, opt);

    const MobiusReduction<C> red = mobius_reduce_impl(f, g);  // throws LimitDoesNotExist
    if (red.denominator.is_zero()) {
        // f = c*g up to cancelled roundoff: the map is constantly c.
        DegreeReport rep;
        rep.method = Method::constant_map;
        rep.degree = 0;
        rep.diagnostics.mobius_constant = coeff_to_complex(red.constant);
        return rep;
    }
    return run_branch(red.numerator, red.denominator, Method::theorem2_after_mobius,
                      coeff_to_complex(red.constant), spec.radius_override, opt);
}

// Radius used for the no-common-zeros check when no dominance radius is
// available (constant maps, hypothesis failures). Best effort: the check
// then covers only this disk.
constexpr double kFallbackCertifyRadius = 2.0;

template <class C>
void certify_or_throw(const PolyMap<C>& spec, double radius, const DegreeOptions& opt) {
    CertifyConfig ccfg;
    ccfg.min_box_size = opt.certify_min_box;
    ccfg.mode = opt.mode;
    try {
        certify_no_common_zeros(to_floating(spec.f), to_floating(spec.g), radius, ccfg);
    } catch (const Inconclusive& e) {
        throw CommonZeroSuspected(e.x_lo, e.x_hi, e.y_lo, e.y_hi);
    }
}

template <class C>
DegreeReport degree_of_impl(const PolyMap<C>& spec, const DegreeOptions& opt) {
    if (spec.f.is_zero() && spec.g.is_zero())
        throw std::invalid_argument("f and g must not both be the zero polynomial");

    if (!opt.certify) return dispatch(spec, opt);

    const double fallback_radius = spec.radius_override.value_or(kFallbackCertifyRadius);
    DegreeReport rep;
    try {
        rep = dispatch(spec, opt);
    } catch (const Error&) {
        // The hypothesis check may be the more fundamental failure; report a
        // suspected common zero in preference to the downstream error.
        certify_or_throw(spec, fallback_radius, opt);
        throw;
    }
    // Beyond the dominance radius the dominant numerator cannot vanish, so
    // the disk |z| <= M contains every possible common zero.
    certify_or_throw(spec, rep.M ? std::max(*rep.M, fallback_radius) : fallback_radius, opt);
    return rep;
}

}  // namespace

DegreeReport degree_of(const PolyMapC& spec, const DegreeOptions& opts) {
    return degree_of_impl(spec, opts);
}

DegreeReport degree_of(const PolyMapQ& spec, const DegreeOptions& opts) {
    return degree_of_impl(spec, opts);
}

double dominance_radius(const BiPolyC& f, const BiPolyC& T, ExecMode mode) {
    const UniPoly tilde = associated_poly(T);
    DiskCountConfig cfg;
    cfg.mode = mode;
    double bound;
    try {
        bound = certified_circle_min(tilde, cfg);
    } catch (const RootOnCircle&) {
        throw TDominanceFailure("no positive lower bound for |T| on the unit circle");
    }
    return dominance_radius_from_bound(f, T.degree(), bound);
}

DegreeReport numeric_degree(const MapSampler& f, const MapSampler& g, double M,
                            const WindingConfig& cfg) {
    if (!(M > 0.0)) throw std::invalid_argument("contour radius must be positive");

    const SampledLoop loop([&f, M](double phi) { return f(std::polar(M, phi)); }, cfg);
    const WindingResult w = winding_details(loop);

    // Poles of the map near the contour do not invalidate the numerator
    // loop, but they are worth a warning; sample the denominator cheaply.
    const double g_min = chunked_min(
        static_cast<std::size_t>(cfg.initial_samples), cfg.mode, [&](std::size_t k) {
            const double phi =
                2.0 * std::numbers::pi * static_cast<double>(k) / cfg.initial_samples;
            return std::abs(g(std::polar(M, phi)));
        });

    DegreeReport rep;
    rep.method = Method::numeric_winding;
    rep.degree = w.index;
    rep.M = M;
    rep.diagnostics.winding_refinement_depth = w.refinement_depth;
    rep.diagnostics.denominator_min_on_contour = g_min;
    return rep;
}

MobiusReduction<std::complex<double>> mobius_reduce(const BiPolyC& f, const BiPolyC& g) {
    return mobius_reduce_impl(f, g);
}

MobiusReduction<GaussianRational> mobius_reduce(const BiPolyQ& f, const BiPolyQ& g) {
    return mobius_reduce_impl(f, g);
}

}  // namespace spheredeg
