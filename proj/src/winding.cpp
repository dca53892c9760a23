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

#include "spheredeg/winding.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct SegmentResult {
    double arg_sum = 0.0;
    int depth = 0;
    double min_modulus = 0.0;
};

// Depth-first accumulation over one arc, left to right, bisecting while the
// increment is ambiguous (|darg| >= pi/2).
void refine_arc(const SampledLoop& loop, double phi_a, std::complex<double> va, double phi_b,
                std::complex<double> vb, int depth, SegmentResult& out) {
    const double darg = std::arg(vb / va);
    if (std::abs(darg) < kPi / 2.0) {
        out.arg_sum += darg;
        out.depth = std::max(out.depth, depth);
        return;
    }
    if (depth >= loop.config().max_depth) throw UnresolvedLoop(phi_a, phi_b);
    const double phi_m = 0.5 * (phi_a + phi_b);
    const std::complex<double> vm = loop.at(phi_m);
    out.min_modulus = std::min(out.min_modulus, std::abs(vm));
    refine_arc(loop, phi_a, va, phi_m, vm, depth + 1, out);
    refine_arc(loop, phi_m, vm, phi_b, vb, depth + 1, out);
}

}  // namespace

SampledLoop::SampledLoop(Sampler sampler, WindingConfig config)
    : sampler_(std::move(sampler)), config_(config) {
    if (config_.initial_samples < 2 || config_.max_depth < 0 || !(config_.min_modulus > 0.0))
        throw std::invalid_argument("invalid winding configuration");
    const std::complex<double> v0 = at(0.0);
    const std::complex<double> v1 = at(kTwoPi);
    // relative closure: winding is scale-invariant, so the tolerance must be too
    const double gap = std::abs(v0 - v1) / (1.0 + std::max(std::abs(v0), std::abs(v1)));
    if (gap > config_.closure_tol) throw LoopNotClosed(gap);
}

std::complex<double> SampledLoop::at(double phi) const {
    const std::complex<double> v = sampler_(phi);
    const double mod = std::abs(v);
    if (!(mod >= config_.min_modulus)) throw LoopTooCloseToZero(phi, mod);
    return v;
}

WindingResult winding_details(const SampledLoop& loop) {
    const WindingConfig& cfg = loop.config();
    const int n = cfg.initial_samples;

    std::vector<std::complex<double>> samples(static_cast<std::size_t>(n) + 1);
    for_each_chunk(samples.size(), cfg.mode, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k)
            samples[k] = loop.at(kTwoPi * static_cast<double>(k) / n);
    });

    // Independent arcs; per-arc results merged in index order so the result
    // does not depend on the execution mode.
    std::vector<SegmentResult> segs(static_cast<std::size_t>(n));
    for_each_chunk(segs.size(), cfg.mode, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            SegmentResult r;
            r.min_modulus = std::min(std::abs(samples[k]), std::abs(samples[k + 1]));
            refine_arc(loop, kTwoPi * static_cast<double>(k) / n, samples[k],
                       kTwoPi * static_cast<double>(k + 1) / n, samples[k + 1], 0, r);
            segs[k] = r;
        }
    });

    double total = 0.0;
    WindingResult res;
    res.min_modulus_seen = std::abs(samples[0]);
    for (const SegmentResult& s : segs) {
        total += s.arg_sum;
        res.refinement_depth = std::max(res.refinement_depth, s.depth);
        res.min_modulus_seen = std::min(res.min_modulus_seen, s.min_modulus);
    }

    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > cfg.integer_tol) throw NonIntegerIndex(turns);
    res.index = static_cast<int>(rounded);
    return res;
}

int winding_number(const SampledLoop& loop) { return winding_details(loop).index; }

std::complex<double> winding_integral(const SampledLoop& loop) {
    constexpr int kNodes = 4096;
    constexpr double kStep = kTwoPi / (2.0 * kNodes);  // central-difference step

    // Periodic trapezoid: endpoints coincide, so a plain average over the
    // nodes suffices.
    const std::complex<double> sum = chunked_sum<std::complex<double>>(
        kNodes, loop.config().mode, [&](std::size_t j) {
            const double t = kTwoPi * static_cast<double>(j) / kNodes;
            const double tm = t - kStep < 0.0 ? t - kStep + kTwoPi : t - kStep;
            const double tp = t + kStep > kTwoPi ? t + kStep - kTwoPi : t + kStep;
            const std::complex<double> deriv = (loop.at(tp) - loop.at(tm)) / (2.0 * kStep);
            return deriv / loop.at(t);
        });

    const std::complex<double> two_pi_i(0.0, kTwoPi);
    return sum * (kTwoPi / kNodes) / two_pi_i;
}

}  // namespace spheredeg
