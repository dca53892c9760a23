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

#ifndef SPHEREDEG_DEGREE_HPP
#define SPHEREDEG_DEGREE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string_view>

#include "spheredeg/bipoly.hpp"
#include "spheredeg/disk_roots.hpp"
#include "spheredeg/unipoly.hpp"
#include "spheredeg/winding.hpp"

namespace spheredeg {

/// How a degree was obtained.
///
/// The engine dispatches on the degrees of f and g:
///   1. f = 0 or g = 0 identically: constant map, degree 0.
///   2. deg f > deg g: count the unit-disk roots of the polynomial associated
///      with the top component of f, minus deg f.
///   3. deg g > deg f: same with the roles swapped; w -> 1/w on the target
///      sphere is a degree-1 automorphism, so the degree is unchanged.
///   4. deg f = deg g: the map has a finite limit c at infinity exactly when
///      the top components are proportional; 1/(R - c) = g/(f - c*g) has the
///      same degree and a strictly smaller denominator degree, reducing to
///      case 2. Non-proportional tops mean the map does not extend to the
///      sphere (LimitDoesNotExist).
///   5. If the associated polynomial has roots on the unit circle the count
///      is meaningless (TDominanceFailure); with a caller-supplied radius the
///      engine falls back to winding the numerator loop directly.
enum class Method {
    theorem2,
    theorem2_after_inversion,
    theorem2_after_mobius,
    numeric_winding,
    constant_map,
};

std::string_view method_name(Method m);

struct Diagnostics {
    std::optional<double> min_T_on_circle;  // certified lower bound on |T| over |z| = 1
    int winding_refinement_depth = 0;
    std::optional<std::complex<double>> mobius_constant;
    std::optional<double> denominator_min_on_contour;  // numeric path: pole proximity warning
};

struct DegreeReport {
    int degree = 0;
    Method method = Method::constant_map;
    std::optional<int> d;             // algebraic degree used by the formula
    std::optional<double> M;          // contour radius (dominance or caller-supplied)
    std::optional<int> roots_inside;  // unit-disk root count, when counted
    std::optional<UniPoly> tilde_T;   // associated polynomial, when formed
    Diagnostics diagnostics;
};

/// Map given as a ratio of two polynomials in z and conj(z). f and g must
/// not both be zero; they must have no common zeros (degree_of can certify
/// this on request). radius_override enables the numeric fallback when the
/// symbolic path is inapplicable.
template <class C>
struct PolyMap {
    BiPoly<C> f, g;
    std::optional<double> radius_override;
};

using PolyMapC = PolyMap<std::complex<double>>;
using PolyMapQ = PolyMap<GaussianRational>;

struct DegreeOptions {
    bool certify = false;          // certify the no-common-zeros hypothesis; throws
                                   // CommonZeroSuspected when inconclusive
    bool force_numeric = false;    // skip root counting, wind the numerator loop
    bool allow_fallback = true;    // permit the numeric fallback on TDominanceFailure
    double certify_min_box = 1e-6;
    WindingConfig winding{};
    ExecMode mode = ExecMode::parallel;
};

/// Degree of the self-map of the Riemann sphere defined by f/g (with the
/// convention that zeros of g and the point at infinity map to infinity).
/// Errors: LimitDoesNotExist, TDominanceFailure, CommonZeroSuspected (only
/// with certify set), plus winding/root-counting errors.
DegreeReport degree_of(const PolyMapC& spec, const DegreeOptions& opts = {});
DegreeReport degree_of(const PolyMapQ& spec, const DegreeOptions& opts = {});

/// Smallest radius M from the doubling search 1, 2, 4, ... such that
/// m_T * M^d exceeds sum_{j<d} C_j M^j, where m_T is a certified positive
/// lower bound of |T| on the unit circle and the C_j come from
/// homogeneous_coeff_norms(f). Beyond M the numerator cannot vanish and its
/// contour loop has the same index as the top component's.
/// Requires T = top_component(f). Throws TDominanceFailure if no positive
/// lower bound for |T| on the circle can be certified.
double dominance_radius(const BiPolyC& f, const BiPolyC& T, ExecMode mode = ExecMode::parallel);

using MapSampler = std::function<std::complex<double>(std::complex<double>)>;

/// Degree by Theorem-1-style sampling: winds the loop phi -> f(M e^{i phi}).
/// The caller asserts that f/g tends to infinity and f does not vanish on
/// |z| >= M; only the contour |z| = M itself is checked (by sampling). g is
/// sampled on the contour only to report pole proximity, never to certify.
DegreeReport numeric_degree(const MapSampler& f, const MapSampler& g, double M,
                            const WindingConfig& cfg = {});

template <class C>
struct MobiusReduction {
    BiPoly<C> numerator;    // g
    BiPoly<C> denominator;  // f - c*g, top-degree terms cancelled
    C constant;             // c, the finite limit of f/g at infinity
};

/// For deg f = deg g with proportional top components (T_f = c * T_g),
/// returns the pair defining 1/(R - c) = g/(f - c*g), which has the same
/// degree as R = f/g and a strictly dominant numerator. Exact coefficients
/// are compared exactly; floating coefficients within relative 1e-9.
/// Throws LimitDoesNotExist otherwise.
MobiusReduction<std::complex<double>> mobius_reduce(const BiPolyC& f, const BiPolyC& g);
MobiusReduction<GaussianRational> mobius_reduce(const BiPolyQ& f, const BiPolyQ& g);

}  // namespace spheredeg

#endif  // SPHEREDEG_DEGREE_HPP
