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

#ifndef SPHEREDEG_UNIPOLY_HPP
#define SPHEREDEG_UNIPOLY_HPP

#include <complex>
#include <string>
#include <vector>

namespace spheredeg {

/// Univariate complex polynomial with dense coefficients, index = power of z.
/// The zero polynomial has an empty coefficient list and degree -1; otherwise
/// the leading coefficient is nonzero (trailing exact zeros are trimmed).
class UniPoly {
  public:
    using Complex = std::complex<double>;

    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> coeffs);

    static UniPoly monomial(int power, Complex coeff);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Complex leading() const;
    Complex coeff(int power) const;

    Complex eval(Complex z) const;  // Horner

    /// Upper bound for |d/da p(e^{ia})| on the unit circle: sum of k*|c_k|.
    double circle_lipschitz() const;

    UniPoly operator*(const UniPoly& other) const;
    UniPoly scaled(Complex c) const;

    /// z^n p(1/z): coefficients reversed. Degree drops if p(0) = 0.
    UniPoly reversed() const;

    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

    std::string str() const;

  private:
    void trim();
    std::vector<Complex> coeffs_;
};

}  // namespace spheredeg

#endif  // SPHEREDEG_UNIPOLY_HPP
