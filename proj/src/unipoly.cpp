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

#include "spheredeg/unipoly.hpp"

#include <cmath>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int power, Complex coeff) {
    std::vector<Complex> c(static_cast<std::size_t>(power) + 1, Complex(0.0));
    c.back() = coeff;
    return UniPoly(std::move(c));
}

UniPoly::Complex UniPoly::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

UniPoly::Complex UniPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Complex(0.0);
    return coeffs_[static_cast<std::size_t>(power)];
}

UniPoly::Complex UniPoly::eval(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double UniPoly::circle_lipschitz() const {
    double l = 0.0;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        l += static_cast<double>(k) * std::abs(coeffs_[k]);
    return l;
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Complex> c(coeffs_.size() + other.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(Complex c) const {
    std::vector<Complex> out(coeffs_);
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::reversed() const {
    std::vector<Complex> out(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(out));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Complex c = coeffs_[static_cast<std::size_t>(k)];
        if (c == Complex(0.0)) continue;
        if (!first) os << " + ";
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    return os.str();
}

}  // namespace spheredeg
