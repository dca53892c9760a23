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

#include "spheredeg/disk_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double certified_circle_min(const UniPoly& p, const DiskCountConfig& cfg) {
    if (p.is_zero()) throw ZeroPolynomial();
    const double lipschitz = p.circle_lipschitz();
    double bound = -1.0;
    for (int n = cfg.initial_circle_samples; n <= cfg.max_circle_samples; n *= 2) {
        const double min_sample =
            chunked_min(static_cast<std::size_t>(n), cfg.mode, [&](std::size_t k) {
                const double a = kTwoPi * static_cast<double>(k) / n;
                return std::abs(p.eval(std::polar(1.0, a)));
            });
        bound = min_sample - lipschitz * std::numbers::pi / n;
        if (bound > 0.0) return bound;
    }
    throw RootOnCircle(bound);
}

RootCountDetails count_roots_in_disk_details(const UniPoly& p, const DiskCountConfig& cfg) {
    if (p.is_zero()) throw ZeroPolynomial();

    const double bound = certified_circle_min(p, cfg);  // throws RootOnCircle

    RootCountDetails out;
    out.count.min_modulus_on_circle = bound;
    if (p.degree() == 0) return out;  // nonzero constant: no roots anywhere

    WindingConfig wcfg = cfg.winding;
    wcfg.mode = cfg.mode;
    const SampledLoop loop([&p](double a) { return p.eval(std::polar(1.0, a)); }, wcfg);
    const WindingResult w = winding_details(loop);
    out.count.inside = w.index;
    out.refinement_depth = w.refinement_depth;
    return out;
}

RootCount count_roots_in_disk(const UniPoly& p, const DiskCountConfig& cfg) {
    return count_roots_in_disk_details(p, cfg).count;
}

std::vector<std::complex<double>> find_all_roots(const UniPoly& p, const RootFindConfig& cfg) {
    using Complex = std::complex<double>;
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("find_all_roots requires degree >= 1");

    // Monic normalization.
    const Complex lead = p.leading();
    std::vector<Complex> c(p.coeffs());
    for (auto& x : c) x /= lead;

    // Initial points on a circle of radius max(1, 2*max|c_k/c_n|), spaced by
    // an irrational rotation so no symmetry of the root set is preserved.
    double radius = 1.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, 2.0 * std::abs(c[static_cast<std::size_t>(k)]));
    constexpr double kGolden = 0.6180339887498949;
    std::vector<Complex> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        x[static_cast<std::size_t>(j)] = std::polar(radius, 0.5 + kTwoPi * kGolden * j);

    auto eval_monic = [&c](Complex z) {
        Complex acc(0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    };

    // Simultaneous (Jacobi-style) Weierstrass updates: every correction is
    // computed from the previous iterate, so the outcome is deterministic
    // and iterations are safe to parallelize.
    std::vector<Complex> next(x.size());
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        double max_step = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            Complex denom(1.0);
            for (std::size_t k = 0; k < x.size(); ++k)
                if (k != j) denom *= x[j] - x[k];
            if (denom == Complex(0.0)) {
                // coincident iterates; nudge deterministically
                next[j] = x[j] + Complex(1e-8 * (static_cast<double>(j) + 1.0), 1e-8);
                max_step = std::max(max_step, 1e-8);
                continue;
            }
            const Complex step = eval_monic(x[j]) / denom;
            next[j] = x[j] - step;
            max_step = std::max(max_step, std::abs(step));
        }
        x.swap(next);
        if (max_step < cfg.step_tol) break;
    }

    // Residual contract, relative to the leading coefficient; multiplicity
    // plateaus stall the step criterion but must still satisfy this.
    for (const Complex& r : x) {
        const double residual = std::abs(eval_monic(r)) / std::pow(1.0 + std::abs(r), n);
        if (!(residual < cfg.residual_tol) || !std::isfinite(r.real()) ||
            !std::isfinite(r.imag()))
            throw NoConvergence(cfg.max_iterations);
    }
    return x;
}

std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double tol) {
    std::vector<std::complex<double>> sorted(roots);
    std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<std::pair<std::complex<double>, int>> out;
    for (const auto& r : sorted) {
        bool placed = false;
        for (auto& [rep, count] : out) {
            if (std::abs(r - rep) <= tol) {
                rep = (rep * static_cast<double>(count) + r) / static_cast<double>(count + 1);
                ++count;
                placed = true;
                break;
            }
        }
        if (!placed) out.emplace_back(r, 1);
    }
    return out;
}

}  // namespace spheredeg
