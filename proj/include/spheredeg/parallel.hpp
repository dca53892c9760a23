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

#ifndef SPHEREDEG_PARALLEL_HPP
#define SPHEREDEG_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <vector>

namespace spheredeg {

/// Execution mode for the data-parallel kernels. `serial` is the reference
/// implementation the tests compare against; `parallel` runs the same
/// chunk schedule under OpenMP and produces bit-identical results.
enum class ExecMode { serial, parallel };

namespace detail {

// Fixed chunk count, independent of the thread count, so that floating-point
// accumulation order (chunk-internal order + ordered chunk merge) never
// depends on how many threads execute.
inline constexpr std::size_t kChunks = 256;

struct ChunkRange {
    std::size_t lo, hi;
};

inline std::size_t chunk_count(std::size_t n) { return std::min<std::size_t>(n, kChunks); }

inline ChunkRange chunk_range(std::size_t n, std::size_t chunks, std::size_t c) {
    const std::size_t base = n / chunks, rem = n % chunks;
    const std::size_t lo = c * base + std::min(c, rem);
    return {lo, lo + base + (c < rem ? 1 : 0)};
}

}  // namespace detail

/// Runs body(c, lo, hi) once per chunk of [0, n). Chunk boundaries are fixed;
/// bodies must write only to per-index or per-chunk slots. An exception from
/// a body is captured (OpenMP regions must not leak exceptions) and the one
/// from the lowest-numbered chunk is rethrown, so failures are deterministic
/// across execution modes.
template <class Body>
void for_each_chunk(std::size_t n, ExecMode mode, Body&& body) {
    if (n == 0) return;
    const std::size_t chunks = detail::chunk_count(n);
    std::vector<std::exception_ptr> errors(chunks);
    std::atomic<bool> failed{false};

    auto guarded = [&](std::size_t c, std::size_t lo, std::size_t hi) {
        try {
            body(c, lo, hi);
        } catch (...) {
            errors[c] = std::current_exception();
            failed.store(true, std::memory_order_relaxed);
        }
    };

    if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
            const auto r = detail::chunk_range(n, chunks, static_cast<std::size_t>(c));
            guarded(static_cast<std::size_t>(c), r.lo, r.hi);
        }
    } else {
        for (std::size_t c = 0; c < chunks; ++c) {
            const auto r = detail::chunk_range(n, chunks, c);
            guarded(c, r.lo, r.hi);
        }
    }

    if (failed.load())
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
}

/// Deterministic sum of term(i) for i in [0, n): each chunk accumulates in
/// index order, partials are merged in chunk order. Identical result in both
/// execution modes.
template <class T, class TermFn>
T chunked_sum(std::size_t n, ExecMode mode, TermFn&& term) {
    if (n == 0) return T{};
    const std::size_t chunks = detail::chunk_count(n);
    std::vector<T> partial(chunks, T{});
    for_each_chunk(n, mode, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[c] = acc;
    });
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

/// Deterministic minimum of term(i) over [0, n). n must be positive.
template <class TermFn>
double chunked_min(std::size_t n, ExecMode mode, TermFn&& term) {
    const std::size_t chunks = detail::chunk_count(n);
    std::vector<double> partial(chunks);
    for_each_chunk(n, mode, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        double m = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) m = std::min(m, term(i));
        partial[c] = m;
    });
    double m = partial[0];
    for (double p : partial) m = std::min(m, p);
    return m;
}

}  // namespace spheredeg

#endif  // SPHEREDEG_PARALLEL_HPP
