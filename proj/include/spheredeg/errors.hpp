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

#ifndef SPHEREDEG_ERRORS_HPP
#define SPHEREDEG_ERRORS_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spheredeg {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- polynomial layer ------------------------------------------------------

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NotHomogeneous : Error {
    NotHomogeneous() : Error("polynomial mixes terms of different total degree") {}
};

// --- parser -----------------------------------------------------------------

/// Parse failure; carries the byte offset and the token set that would have
/// been accepted at that position.
struct SyntaxError : Error {
    std::size_t offset;
    std::vector<std::string> expected;

    SyntaxError(std::size_t off, std::vector<std::string> exp, const std::string& what_arg)
        : Error(what_arg), offset(off), expected(std::move(exp)) {}
};

struct NonIntegerExponent : SyntaxError {
    explicit NonIntegerExponent(std::size_t off)
        : SyntaxError(off, {"nonnegative integer"},
                      "exponent must be a nonnegative integer (offset " + std::to_string(off) + ")") {}
};

struct NegativeExponent : SyntaxError {
    explicit NegativeExponent(std::size_t off)
        : SyntaxError(off, {"nonnegative integer"},
                      "negative exponents are not allowed (offset " + std::to_string(off) + ")") {}
};

// --- winding ----------------------------------------------------------------

struct LoopTooCloseToZero : Error {
    double phi;
    double modulus;

    LoopTooCloseToZero(double angle, double mod)
        : Error("loop passes too close to the origin at angle " + std::to_string(angle) +
                " (|value| = " + std::to_string(mod) + "); increase the radius"),
          phi(angle), modulus(mod) {}
};

struct LoopNotClosed : Error {
    double gap;  // relative to the loop magnitude
    explicit LoopNotClosed(double g)
        : Error("sampler(0) and sampler(2*pi) differ by a relative gap of " + std::to_string(g)),
          gap(g) {}
};

struct UnresolvedLoop : Error {
    double phi_lo, phi_hi;
    UnresolvedLoop(double lo, double hi)
        : Error("argument increment stayed >= pi/2 after maximum refinement on [" +
                std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          phi_lo(lo), phi_hi(hi) {}
};

struct NonIntegerIndex : Error {
    double value;
    explicit NonIntegerIndex(double v)
        : Error("accumulated argument / 2*pi = " + std::to_string(v) +
                " is not within tolerance of an integer"),
          value(v) {}
};

// --- root counting ----------------------------------------------------------

struct RootOnCircle : Error {
    double certified_bound;
    explicit RootOnCircle(double bound)
        : Error("cannot certify a positive minimum on the unit circle; a root lies on or "
                "numerically on |z| = 1"),
          certified_bound(bound) {}
};

struct NoConvergence : Error {
    int iterations;
    explicit NoConvergence(int iters)
        : Error("root iteration did not converge after " + std::to_string(iters) + " iterations"),
          iterations(iters) {}
};

// --- degree engine ----------------------------------------------------------

struct LimitDoesNotExist : Error {
    LimitDoesNotExist()
        : Error("f and g have equal degree but non-proportional top components: "
                "f/g has no limit at infinity and the map does not extend to the sphere") {}
};

struct TDominanceFailure : Error {
    explicit TDominanceFailure(const std::string& detail)
        : Error("top component does not dominate: " + detail) {}
};

struct CommonZeroSuspected : Error {
    double x_lo, x_hi, y_lo, y_hi;  // suspect region
    CommonZeroSuspected(double xl, double xh, double yl, double yh)
        : Error("could not certify that f and g have no common zeros; suspect box [" +
                std::to_string(xl) + ", " + std::to_string(xh) + "] x [" + std::to_string(yl) +
                ", " + std::to_string(yh) + "]"),
          x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh) {}
};

// --- verification -----------------------------------------------------------

struct Inconclusive : Error {
    double x_lo, x_hi, y_lo, y_hi;
    Inconclusive(double xl, double xh, double yl, double yh)
        : Error("subdivision reached the minimum box size without certifying [" +
                std::to_string(xl) + ", " + std::to_string(xh) + "] x [" + std::to_string(yl) +
                ", " + std::to_string(yh) + "]"),
          x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh) {}
};

struct GridPointSingular : Error {
    std::complex<double> at;
    explicit GridPointSingular(std::complex<double> p)
        : Error("quadrature sample landed on a near-common zero of f and g"), at(p) {}
};

}  // namespace spheredeg

#endif  // SPHEREDEG_ERRORS_HPP
