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

// Compares the serial reference kernels against the OpenMP ones on the hot
// paths: the area-integral oracle, the subdivision certifier, and the circle
// scan behind root counting. The two modes share one chunk schedule, so the
// results must match bit for bit; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "spheredeg/degree.hpp"
#include "spheredeg/disk_roots.hpp"
#include "spheredeg/parser.hpp"
#include "spheredeg/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spheredeg;

namespace {

template <class Fn>
double time_of(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-28s %9.3fs %9.3fs   x%.2f   results %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int grid = argc > 1 ? std::atoi(argv[1]) : 600;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-28s %10s %10s\n", "kernel", "serial", "parallel");

    const BiPolyC f = to_floating(parse_bipoly("z*conj(z)^4 + z*conj(z)^2 + 3"));
    const BiPolyC g = to_floating(parse_bipoly("z^3*conj(z) + z"));

    {
        AreaOracleConfig cs, cp;
        cs.grid = cp.grid = grid;
        cs.mode = ExecMode::serial;
        cp.mode = ExecMode::parallel;
        double rs = 0, rp = 0;
        const double ts = time_of([&] { rs = degree_via_area_integral(f, g, cs); });
        const double tp = time_of([&] { rp = degree_via_area_integral(f, g, cp); });
        report("area integral oracle", ts, tp, rs == rp);
    }

    {
        CertifyConfig cs, cp;
        cs.min_box_size = cp.min_box_size = 1e-5;
        cs.mode = ExecMode::serial;
        cp.mode = ExecMode::parallel;
        bool rs = false, rp = false;
        const double ts = time_of([&] { rs = certify_no_common_zeros(f, g, 2.0, cs); });
        const double tp = time_of([&] { rp = certify_no_common_zeros(f, g, 2.0, cp); });
        report("common-zero certifier", ts, tp, rs == rp);
    }

    {
        // high-resolution circle scan on a polynomial with roots close to
        // the unit circle
        UniPoly p = UniPoly::monomial(12, 1.0);
        p = p * UniPoly({{0.999, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
        DiskCountConfig cs, cp;
        cs.initial_circle_samples = cp.initial_circle_samples = 1 << 18;
        cs.mode = ExecMode::serial;
        cp.mode = ExecMode::parallel;
        double rs = 0, rp = 0;
        const double ts = time_of([&] { rs = certified_circle_min(p, cs); });
        const double tp = time_of([&] { rp = certified_circle_min(p, cp); });
        report("circle modulus scan", ts, tp, rs == rp);
    }

    return 0;
}
