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

#ifndef SPHEREDEG_BIPOLY_HPP
#define SPHEREDEG_BIPOLY_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spheredeg/errors.hpp"
#include "spheredeg/rational.hpp"
#include "spheredeg/unipoly.hpp"

namespace spheredeg {

/// \file
/// Polynomials in the two commuting formal variables z and conj(z), sparse
/// over an exact (GaussianRational) or floating (std::complex<double>)
/// coefficient field. Values are immutable after construction and all
/// operations are pure, so they can be shared freely between threads.

// Coefficient adapters. BiPoly works over any type providing these.
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }
inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline std::complex<double> coeff_conj(const std::complex<double>& c) { return std::conj(c); }
inline GaussianRational coeff_conj(const GaussianRational& c) { return c.conj(); }
inline std::complex<double> coeff_to_complex(const std::complex<double>& c) { return c; }
inline std::complex<double> coeff_to_complex(const GaussianRational& c) { return c.to_complex(); }

/// Exponents of a monomial z^p * conj(z)^q.
struct Bidegree {
    int p = 0, q = 0;
    int total() const { return p + q; }
    friend bool operator==(Bidegree a, Bidegree b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(Bidegree a, Bidegree b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

/// Sparse polynomial in z and conj(z). Canonical form: no stored coefficient
/// is exactly zero (no epsilon pruning; dropping small coefficients could
/// change the algebraic degree and the top component).
template <class C>
class BiPoly {
  public:
    using Coeff = C;
    using TermMap = std::map<Bidegree, C>;

    BiPoly() = default;

    static BiPoly constant(C c) { return monomial(0, 0, std::move(c)); }
    static BiPoly var_z() { return monomial(1, 0, C(1)); }
    static BiPoly var_zbar() { return monomial(0, 1, C(1)); }

    static BiPoly monomial(int p, int q, C coeff) {
        if (p < 0 || q < 0) throw std::invalid_argument("negative monomial exponent");
        BiPoly r;
        if (!coeff_is_zero(coeff)) r.terms_.emplace(Bidegree{p, q}, std::move(coeff));
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Algebraic degree max(p+q); -1 sentinel for the zero polynomial.
    /// Callers must branch on the sentinel, it is never valid in formulas.
    int degree() const {
        int d = -1;
        for (const auto& [bd, c] : terms_) d = std::max(d, bd.total());
        return d;
    }

    C coeff(int p, int q) const {
        auto it = terms_.find(Bidegree{p, q});
        return it == terms_.end() ? C(0) : it->second;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [bd, c] : b.terms_) r.add_term(bd, c);
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [bd, c] : b.terms_) r.add_term(bd, -c);
        return r;
    }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [bd, c] : terms_) r.terms_.emplace(bd, -c);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [bda, ca] : a.terms_)
            for (const auto& [bdb, cb] : b.terms_)
                r.add_term(Bidegree{bda.p + bdb.p, bda.q + bdb.q}, ca * cb);
        return r;
    }

    BiPoly scaled(const C& c) const {
        BiPoly r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [bd, tc] : terms_) r.add_term(bd, tc * c);
        return r;
    }

    /// Swaps each (p, q) and conjugates coefficients, so that
    /// conjugate().eval(w) == conj(eval(w)) for all w.
    BiPoly conjugate() const {
        BiPoly r;
        for (const auto& [bd, c] : terms_) r.terms_.emplace(Bidegree{bd.q, bd.p}, coeff_conj(c));
        return r;
    }

    std::complex<double> eval(std::complex<double> w) const {
        const std::complex<double> wb = std::conj(w);
        std::complex<double> acc(0.0);
        for (const auto& [bd, c] : terms_)
            acc += coeff_to_complex(c) * ipow(w, bd.p) * ipow(wb, bd.q);
        return acc;
    }

    /// Sum of the terms of maximal total degree d; homogeneous of degree d.
    BiPoly top_component() const {
        if (is_zero()) throw ZeroPolynomial();
        const int d = degree();
        BiPoly r;
        for (const auto& [bd, c] : terms_)
            if (bd.total() == d) r.terms_.emplace(bd, c);
        return r;
    }

    /// True if all terms share one total degree (the zero polynomial counts
    /// as homogeneous).
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.total();
        for (const auto& [bd, c] : terms_)
            if (bd.total() != d) return false;
        return true;
    }

    /// Drops every term of the given total degree.
    BiPoly without_total_degree(int d) const {
        BiPoly r;
        for (const auto& [bd, c] : terms_)
            if (bd.total() != d) r.terms_.emplace(bd, c);
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  private:
    void add_term(Bidegree bd, C c) {
        auto [it, inserted] = terms_.emplace(bd, c);
        if (!inserted) {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        } else if (coeff_is_zero(it->second)) {
            terms_.erase(it);
        }
    }

    static std::complex<double> ipow(std::complex<double> base, int e) {
        std::complex<double> r(1.0);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    TermMap terms_;
};

using BiPolyC = BiPoly<std::complex<double>>;
using BiPolyQ = BiPoly<GaussianRational>;

inline BiPolyC to_floating(const BiPolyQ& p) {
    BiPolyC r;
    for (const auto& [bd, c] : p.terms()) {
        const auto cc = c.to_complex();
        if (cc != std::complex<double>(0.0)) r = r + BiPolyC::monomial(bd.p, bd.q, cc);
    }
    return r;
}

inline const BiPolyC& to_floating(const BiPolyC& p) { return p; }

/// For homogeneous T of degree d, the univariate polynomial
/// z^d T(z, z^-1) = sum_p c_{p,d-p} z^{2p}. Only even powers appear and
/// deg <= 2d. Root counting is floating-point, so the result is always a
/// complex-coefficient UniPoly even when T is exact.
template <class C>
UniPoly associated_poly(const BiPoly<C>& T) {
    if (T.is_zero()) throw ZeroPolynomial();
    if (!T.is_homogeneous()) throw NotHomogeneous();
    const int d = T.degree();
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(2 * d) + 1,
                                             std::complex<double>(0.0));
    for (const auto& [bd, c] : T.terms())
        coeffs[static_cast<std::size_t>(2 * bd.p)] = coeff_to_complex(c);
    return UniPoly(std::move(coeffs));
}

/// Per total degree j, C_j = sum of |coefficient| over the terms of that
/// degree, listed by descending j. On |z| = r this bounds the tail:
/// |p(z) - top(z)| <= sum_{j<d} C_j r^j.
template <class C>
std::vector<std::pair<int, double>> homogeneous_coeff_norms(const BiPoly<C>& p) {
    std::map<int, double> by_degree;
    for (const auto& [bd, c] : p.terms()) by_degree[bd.total()] += std::abs(coeff_to_complex(c));
    std::vector<std::pair<int, double>> out(by_degree.rbegin(), by_degree.rend());
    return out;
}

namespace detail {

inline std::string coeff_str(const std::complex<double>& c) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "*i)";
    return os.str();
}

inline std::string coeff_str(const GaussianRational& c) {
    std::string im = c.im.is_negative() ? (-c.im).str() : c.im.str();
    return "(" + c.re.str() + (c.im.is_negative() ? "-" : "+") + im + "*i)";
}

}  // namespace detail

/// Canonical printer; the parser reads this form back exactly.
/// Terms appear by descending total degree, then descending p.
template <class C>
std::string to_string(const BiPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Bidegree, C>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
        return a.first.p > b.first.p;
    });
    std::string out;
    for (const auto& [bd, c] : terms) {
        if (!out.empty()) out += " + ";
        out += detail::coeff_str(c);
        if (bd.p > 0) out += "*z^" + std::to_string(bd.p);
        if (bd.q > 0) out += "*conj(z)^" + std::to_string(bd.q);
    }
    return out;
}

}  // namespace spheredeg

#endif  // SPHEREDEG_BIPOLY_HPP
