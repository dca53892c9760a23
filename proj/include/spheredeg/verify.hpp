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

#ifndef SPHEREDEG_VERIFY_HPP
#define SPHEREDEG_VERIFY_HPP

#include <complex>
#include <cstddef>
#include <functional>

#include "spheredeg/bipoly.hpp"
#include "spheredeg/parallel.hpp"

namespace spheredeg {

/// Axis-aligned rectangle in the (Re z, Im z) plane.
struct Box2 {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;

    double width() const { return x_hi - x_lo; }
    double height() const { return y_hi - y_lo; }
    double max_side() const { return width() > height() ? width() : height(); }
    std::complex<double> center() const { return {0.5 * (x_lo + x_hi), 0.5 * (y_lo + y_hi)}; }
    /// Half of the diagonal: the largest |z - center| over the box.
    double half_diagonal() const;
    /// Largest |z| over the box (attained at a corner).
    double max_abs() const;
    /// Smallest |z| over the box.
    double min_abs() const;
};

struct CertifyConfig {
    double min_box_size = 1e-6;
    // Hard ceiling on live boxes; exceeding it ends the run as inconclusive
    // instead of exhausting memory on a degenerate input.
    std::size_t max_boxes = std::size_t{1} << 22;
    ExecMode mode = ExecMode::parallel;
};

/// Certifies that max(|f|, |g|) > 0 on every sub-box meeting the disk
/// |z| <= radius, by recursive subdivision with centered-form enclosures:
/// on a box with center m and half-diagonal r, |p| >= |p(m)| - Lip_p * r,
/// with Lip_p = sum (p'+q') |c| rho^(p'+q'-1) for rho = max |z| on the box.
/// Outside the disk the caller must have excluded common zeros separately
/// (a dominance radius provides this).
///
/// Returns true on success. Throws Inconclusive with the first suspect box
/// (in a fixed subdivision order, so reports are reproducible) if the
/// minimum box size is reached; this never claims a common zero exists.
bool certify_no_common_zeros(const BiPolyC& f, const BiPolyC& g, double radius,
                              const CertifyConfig& cfg = {});

using MapSampler = std::function<std::complex<double>(std::complex<double>)>;

struct AreaOracleConfig {
    int grid = 400;       // cells per axis, per chart
    int max_retries = 3;  // grid perturbations after a singular sample
    ExecMode mode = ExecMode::parallel;
};

/// Independent brute-force degree estimate: integrates the pulled-back area
/// form of the sphere over two charts (z in the unit disk and w = 1/z in the
/// unit disk) with midpoint quadrature; the map is pushed onto the sphere by
/// inverse stereographic projection and the Jacobian density is formed with
/// central finite differences (step = half the grid spacing). The sign is
/// normalized so the identity map scores +1. At grid >= 400 the result lands
/// within 0.1 of the true integer degree for maps of desk-scale coefficients.
///
/// Throws GridPointSingular if, after max_retries deterministic grid shifts,
/// a quadrature sample still lands within 1e-9 of a common near-zero of
/// f and g.
double degree_via_area_integral(const MapSampler& f, const MapSampler& g,
                                const AreaOracleConfig& cfg = {});
double degree_via_area_integral(const BiPolyC& f, const BiPolyC& g,
                                const AreaOracleConfig& cfg = {});

}  // namespace spheredeg

#endif  // SPHEREDEG_VERIFY_HPP
