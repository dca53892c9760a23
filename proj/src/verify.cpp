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

#include "spheredeg/verify.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <vector>

#include "spheredeg/errors.hpp"

namespace spheredeg {

double Box2::half_diagonal() const { return 0.5 * std::hypot(width(), height()); }

double Box2::max_abs() const {
    const double ax = std::max(std::abs(x_lo), std::abs(x_hi));
    const double ay = std::max(std::abs(y_lo), std::abs(y_hi));
    return std::hypot(ax, ay);
}

double Box2::min_abs() const {
    const double dx = x_lo > 0 ? x_lo : (x_hi < 0 ? -x_hi : 0.0);
    const double dy = y_lo > 0 ? y_lo : (y_hi < 0 ? -y_hi : 0.0);
    return std::hypot(dx, dy);
}

namespace {

// Per-total-degree absolute coefficient sums, indexed by degree; drives the
// Lipschitz bound sum_j j * D_j * rho^(j-1).
std::vector<double> degree_norms(const BiPolyC& p) {
    std::vector<double> d(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, 0.0);
    for (const auto& [bd, c] : p.terms()) d[static_cast<std::size_t>(bd.total())] += std::abs(c);
    return d;
}

double lipschitz_on(const std::vector<double>& norms, double rho) {
    double lip = 0.0, rho_pow = 1.0;  // rho^(j-1), starting at j = 1
    for (std::size_t j = 1; j < norms.size(); ++j) {
        lip += static_cast<double>(j) * norms[j] * rho_pow;
        rho_pow *= rho;
    }
    return lip;
}

enum class BoxOutcome { certified, split, inconclusive };

}  // namespace

bool certify_no_common_zeros(const BiPolyC& f, const BiPolyC& g, double radius,
                             const CertifyConfig& cfg) {
    if (!(radius > 0.0)) throw std::invalid_argument("certification radius must be positive");

    const std::vector<double> nf = degree_norms(f), ng = degree_norms(g);

    auto certified_nonzero_on = [&](const Box2& b) {
        const std::complex<double> m = b.center();
        const double r = b.half_diagonal(), rho = b.max_abs();
        const double lower_f = std::abs(f.eval(m)) - lipschitz_on(nf, rho) * r;
        if (lower_f > 0.0) return true;
        const double lower_g = std::abs(g.eval(m)) - lipschitz_on(ng, rho) * r;
        return lower_g > 0.0;
    };

    std::vector<Box2> frontier{Box2{-radius, radius, -radius, radius}};
    while (!frontier.empty()) {
        const std::size_t n = frontier.size();
        std::vector<BoxOutcome> outcome(n);
        for_each_chunk(n, cfg.mode, [&](std::size_t, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const Box2& b = frontier[i];
                if (b.min_abs() > radius)  // entirely outside the disk
                    outcome[i] = BoxOutcome::certified;
                else if (certified_nonzero_on(b))
                    outcome[i] = BoxOutcome::certified;
                else if (b.max_side() <= cfg.min_box_size)
                    outcome[i] = BoxOutcome::inconclusive;
                else
                    outcome[i] = BoxOutcome::split;
            }
        });

        // First inconclusive box in subdivision order, for reproducibility.
        for (std::size_t i = 0; i < n; ++i)
            if (outcome[i] == BoxOutcome::inconclusive) {
                const Box2& b = frontier[i];
                throw Inconclusive(b.x_lo, b.x_hi, b.y_lo, b.y_hi);
            }

        std::size_t splits = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (outcome[i] == BoxOutcome::split) ++splits;
        if (4 * splits > cfg.max_boxes) {
            // frontier would outgrow the budget; give up on the first
            // still-open box rather than exhausting memory
            for (std::size_t i = 0; i < n; ++i)
                if (outcome[i] == BoxOutcome::split) {
                    const Box2& b = frontier[i];
                    throw Inconclusive(b.x_lo, b.x_hi, b.y_lo, b.y_hi);
                }
        }

        std::vector<Box2> next;
        next.reserve(4 * splits);
        for (std::size_t i = 0; i < n; ++i) {
            if (outcome[i] != BoxOutcome::split) continue;
            const Box2& b = frontier[i];
            const double xm = 0.5 * (b.x_lo + b.x_hi), ym = 0.5 * (b.y_lo + b.y_hi);
            next.push_back({b.x_lo, xm, b.y_lo, ym});
            next.push_back({xm, b.x_hi, b.y_lo, ym});
            next.push_back({b.x_lo, xm, ym, b.y_hi});
            next.push_back({xm, b.x_hi, ym, b.y_hi});
        }
        frontier.swap(next);
    }
    return true;
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr double kSingularScale = 1e-9;
constexpr Vec3 kNorthPole{0.0, 0.0, 1.0};

// First singular sample of an attempt; one thread claims the slot, the value
// is read only after the parallel region joins.
struct SingularRecord {
    std::atomic<bool> hit{false};
    std::atomic<bool> claimed{false};
    std::complex<double> at{0.0};

    void record(std::complex<double> z) {
        hit.store(true, std::memory_order_relaxed);
        if (!claimed.exchange(true, std::memory_order_acq_rel)) at = z;
    }
};

// Inverse stereographic projection of f/g written homogeneously, so that
// poles of the ratio need no special casing. Values at infinity (chart
// transition) land on the north pole; a genuinely tiny (f, g) pair marks the
// sample singular.
struct SphereSampler {
    const MapSampler& f;
    const MapSampler& g;
    SingularRecord* singular;

    Vec3 at(std::complex<double> z) const {
        const std::complex<double> fv = f(z), gv = g(z);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()) ||
            !std::isfinite(gv.real()) || !std::isfinite(gv.imag()))
            return kNorthPole;
        const double s = std::norm(fv) + std::norm(gv);
        if (!(s > kSingularScale * kSingularScale)) {
            singular->record(z);
            return kNorthPole;
        }
        const std::complex<double> fg = fv * std::conj(gv);
        return {2.0 * fg.real() / s, 2.0 * fg.imag() / s, (std::norm(fv) - std::norm(gv)) / s};
    }
};

// Midpoint quadrature of the pulled-back area density over one chart's unit
// disk. The grid is uniform in polar coordinates so the cells tile the disk
// exactly; a Cartesian cell grid leaks O(h) of area along the rim, which is
// where these integrands are busiest. The density J is a pointwise quantity
// and keeps its Cartesian finite-difference stencil. `invert` selects the
// w = 1/z chart.
double chart_integral(const SphereSampler& sphere, bool invert, int grid, double offset,
                      ExecMode mode) {
    const int n_r = std::max(grid / 2, 1);
    const int n_th = 3 * std::max(grid, 2);
    const double dr = 1.0 / n_r;
    const double dth = 2.0 * std::numbers::pi / n_th;
    const double h = 0.5 * dr;  // finite-difference step: half the grid spacing

    auto point = [&](double x, double y) {
        std::complex<double> zc(x, y);
        if (invert) {
            if (zc == std::complex<double>(0.0)) return kNorthPole;
            zc = 1.0 / zc;
        }
        return sphere.at(zc);
    };

    const std::size_t cells = static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_th);
    const double sum = chunked_sum<double>(cells, mode, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / n_th, j = static_cast<int>(idx) % n_th;
        const double r = (i + 0.5) * dr + offset;
        const double th = (j + 0.5) * dth + offset;
        const double x = r * std::cos(th), y = r * std::sin(th);

        const Vec3 center = point(x, y);
        const Vec3 px = point(x + h, y), mx = point(x - h, y);
        const Vec3 py = point(x, y + h), my = point(x, y - h);
        Vec3 du, dv;
        for (int k = 0; k < 3; ++k) {
            du[k] = (px[k] - mx[k]) / (2.0 * h);
            dv[k] = (py[k] - my[k]) / (2.0 * h);
        }
        return dot(cross(du, dv), center) * r;  // polar area element
    });
    return sum * dr * dth;
}

}  // namespace

double degree_via_area_integral(const MapSampler& f, const MapSampler& g,
                                const AreaOracleConfig& cfg) {
    if (cfg.grid < 2) throw std::invalid_argument("oracle grid too small");
    const double spacing = 2.0 / cfg.grid;

    std::complex<double> last_singular_at(0.0);
    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        SingularRecord singular;
        const SphereSampler sphere{f, g, &singular};
        // Deterministic off-grid shift; attempt 0 is the unshifted grid.
        const double offset = spacing * std::numbers::inv_pi * attempt / (cfg.max_retries + 1);

        const double inner = chart_integral(sphere, false, cfg.grid, offset, cfg.mode);
        const double outer = chart_integral(sphere, true, cfg.grid, offset, cfg.mode);
        if (!singular.hit.load()) {
            // Sign fixed so the identity map scores +1 (the z-chart is
            // negatively oriented relative to the outward sphere normal).
            return -(inner + outer) / (4.0 * std::numbers::pi);
        }
        last_singular_at = singular.at;
    }
    throw GridPointSingular(last_singular_at);
}

double degree_via_area_integral(const BiPolyC& f, const BiPolyC& g, const AreaOracleConfig& cfg) {
    const MapSampler fs = [&f](std::complex<double> z) { return f.eval(z); };
    const MapSampler gs = [&g](std::complex<double> z) { return g.eval(z); };
    return degree_via_area_integral(fs, gs, cfg);
}

}  // namespace spheredeg
