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

#ifndef SPHEREDEG_DISK_ROOTS_HPP
#define SPHEREDEG_DISK_ROOTS_HPP

#include <complex>
#include <utility>
#include <vector>

#include "spheredeg/parallel.hpp"
#include "spheredeg/unipoly.hpp"
#include "spheredeg/winding.hpp"

namespace spheredeg {

struct RootCount {
    int inside = 0;                     // roots with |z| < 1, with multiplicity
    bool on_circle_detected = false;    // true only on the error path
    double min_modulus_on_circle = 0.0; // certified lower bound of |p| on |z| = 1
};

struct DiskCountConfig {
    int initial_circle_samples = 256;
    int max_circle_samples = 1 << 22;
    WindingConfig winding{};
    ExecMode mode = ExecMode::parallel;
};

struct RootCountDetails {
    RootCount count;
    int refinement_depth = 0;
};

/// Certified lower bound for min |p| on the unit circle: min over N uniform
/// samples minus the Lipschitz slack L*pi/N with L = sum k*|c_k|, with N
/// doubled until the bound is positive. Throws RootOnCircle if the bound
/// stays nonpositive at the sample limit.
double certified_circle_min(const UniPoly& p, const DiskCountConfig& cfg = {});

/// Number of roots of p strictly inside the unit disk, with multiplicity,
/// computed as the winding number of a -> p(e^{ia}) about 0 (argument
/// principle). The count is only produced once a positive minimum of |p| on
/// the circle has been certified; otherwise RootOnCircle is thrown.
/// Throws ZeroPolynomial for p = 0.
// TODO: add a Schur-Cohn table as a second, sampling-free counting route.
RootCountDetails count_roots_in_disk_details(const UniPoly& p, const DiskCountConfig& cfg = {});
RootCount count_roots_in_disk(const UniPoly& p, const DiskCountConfig& cfg = {});

struct RootFindConfig {
    int max_iterations = 1000;
    double step_tol = 1e-13;      // stop when the largest simultaneous update falls below
    double residual_tol = 1e-8;   // required |p(r)| / (1 + |r|)^deg per root
};

/// All roots of p (degree >= 1), with multiplicity appearing as clustered
/// repeats, by simultaneous Weierstrass iteration from perturbed points on a
/// circle. Independent of the winding-number path; used as its oracle.
/// Throws NoConvergence if the residual contract cannot be met.
std::vector<std::complex<double>> find_all_roots(const UniPoly& p, const RootFindConfig& cfg = {});

/// Groups approximate roots within `tol` of a cluster representative;
/// returns (centroid, multiplicity) pairs. Heuristic, adequate at desk scale.
std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double tol = 1e-6);

}  // namespace spheredeg

#endif  // SPHEREDEG_DISK_ROOTS_HPP
