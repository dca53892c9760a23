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

#ifndef SPHEREDEG_WINDING_HPP
#define SPHEREDEG_WINDING_HPP

#include <complex>
#include <functional>

#include "spheredeg/parallel.hpp"

namespace spheredeg {

struct WindingConfig {
    int initial_samples = 256;   // uniform angles before adaptive refinement
    double min_modulus = 1e-12;  // below this the argument is numerically meaningless
    int max_depth = 30;          // bisections per arc
    double closure_tol = 1e-9;
    double integer_tol = 1e-6;
    ExecMode mode = ExecMode::parallel;
};

/// A closed path in C \ {0} given by a sampler on [0, 2*pi] plus refinement
/// configuration. The sampler must be a pure function of the angle: the
/// refinement may query it from several threads at once, and the result is
/// deterministic for a fixed config regardless of evaluation order.
///
/// Sampling assumption: between adjacent samples the loop is assumed tame
/// enough that bisection can bring every argument increment below pi/2.
/// No finite sampling scheme can certify the index of an arbitrary
/// continuous loop; for loops that oscillate below the sampling resolution
/// the computation fails loudly rather than guessing.
class SampledLoop {
  public:
    using Sampler = std::function<std::complex<double>(double)>;

    /// Throws LoopTooCloseToZero if an endpoint sample is below min_modulus,
    /// LoopNotClosed if sampler(0) and sampler(2*pi) disagree beyond
    /// closure_tol.
    explicit SampledLoop(Sampler sampler, WindingConfig config = {});

    /// Modulus-guarded sample; throws LoopTooCloseToZero.
    std::complex<double> at(double phi) const;

    const WindingConfig& config() const { return config_; }

  private:
    Sampler sampler_;
    WindingConfig config_;
};

struct WindingResult {
    int index = 0;
    int refinement_depth = 0;    // deepest bisection level used
    double min_modulus_seen = 0.0;
};

/// Winding number about 0 by discrete argument accumulation: consecutive
/// increments arg(v_{k+1}/v_k) are refined by bisection until all are below
/// pi/2, then summed; the total divided by 2*pi must land on an integer
/// within integer_tol. Throws UnresolvedLoop if refinement exhausts
/// max_depth and NonIntegerIndex if the sum does not resolve.
WindingResult winding_details(const SampledLoop& loop);
int winding_number(const SampledLoop& loop);

/// Quadrature cross-check of winding_number: evaluates
/// 1/(2*pi*i) * integral of a'(t)/a(t) dt by composite trapezoid (4096
/// points) with central finite differences (step 2*pi/8192), returned
/// unrounded. Diagnostic only; requires a smooth sampler.
std::complex<double> winding_integral(const SampledLoop& loop);

}  // namespace spheredeg

#endif  // SPHEREDEG_WINDING_HPP
