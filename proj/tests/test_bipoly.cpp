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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spheredeg/bipoly.hpp"
#include "test_support.hpp"

using namespace spheredeg;
using spheredeg::testing::close;
using spheredeg::testing::make_rng;
using spheredeg::testing::random_bipoly;
using spheredeg::testing::random_point;

namespace {
const BiPolyC Z = BiPolyC::var_z();
const BiPolyC ZB = BiPolyC::var_zbar();
BiPolyC c(double re, double im = 0.0) { return BiPolyC::constant({re, im}); }
}  // namespace

TEST_CASE("addition") {
    CHECK(Z + ZB == BiPolyC::monomial(1, 0, 1.0) + BiPolyC::monomial(0, 1, 1.0));
    const BiPolyC p = Z * ZB + c(2);
    CHECK(p + BiPolyC() == p);                 // identity
    CHECK((Z * ZB + (-(Z * ZB))).is_zero());   // cancellation drops the term
    CHECK((Z * ZB - Z * ZB).degree() == -1);   // zero polynomial sentinel
}

TEST_CASE("multiplication") {
    CHECK(Z * ZB == BiPolyC::monomial(1, 1, 1.0));
    CHECK((Z + c(1)) * (Z - c(1)) == BiPolyC::monomial(2, 0, 1.0) - c(1));

    // (z zbar + 1)(z^3 zbar + z) = z^4 zbar^2 + z^2 zbar + z^3 zbar + z
    const BiPolyC lhs = (Z * ZB + c(1)) * (Z * Z * Z * ZB + Z);
    const BiPolyC rhs = BiPolyC::monomial(4, 2, 1.0) + BiPolyC::monomial(2, 1, 1.0) +
                        BiPolyC::monomial(3, 1, 1.0) + Z;
    CHECK(lhs == rhs);
}

TEST_CASE("evaluation") {
    CHECK(close((Z * ZB).eval({1.0, 1.0}), 2.0, 1e-15));  // |1+i|^2
    const BiPolyC p = Z * Z * Z * ZB + Z;
    CHECK(p.eval(0.0) == std::complex<double>(0.0));
    const BiPolyC q = BiPolyC::monomial(1, 4, 1.0) + BiPolyC::monomial(1, 2, 1.0) + c(3);
    CHECK(close(q.eval(1.0), 5.0, 1e-15));
}

TEST_CASE("degree and top component") {
    const BiPolyC f3 = BiPolyC::monomial(1, 4, 1.0) + BiPolyC::monomial(1, 2, 1.0) + c(3);
    CHECK(f3.degree() == 5);
    CHECK(f3.top_component() == BiPolyC::monomial(1, 4, 1.0));

    const BiPolyC f4 = BiPolyC::monomial(2, 3, 1.0) + BiPolyC::monomial(4, 1, 2.0) +
                       BiPolyC::monomial(2, 0, 3.0) + c(2);
    CHECK(f4.top_component() ==
          BiPolyC::monomial(2, 3, 1.0) + BiPolyC::monomial(4, 1, 2.0));

    const BiPolyC f5 = BiPolyC::monomial(3, 0, 1.0) + BiPolyC::monomial(0, 3, 1.0) + Z;
    CHECK(f5.top_component() == BiPolyC::monomial(3, 0, 1.0) + BiPolyC::monomial(0, 3, 1.0));

    CHECK_THROWS_AS(BiPolyC().top_component(), ZeroPolynomial);
}

TEST_CASE("associated polynomial") {
    // z zbar^4 -> z^2
    CHECK(associated_poly(BiPolyC::monomial(1, 4, 1.0)) == UniPoly::monomial(2, 1.0));

    // z^2 zbar^3 + 2 z^4 zbar -> z^4 + 2 z^8
    const UniPoly t4 =
        associated_poly(BiPolyC::monomial(2, 3, 1.0) + BiPolyC::monomial(4, 1, 2.0));
    CHECK(t4.degree() == 8);
    CHECK(t4.coeff(4) == std::complex<double>(1.0));
    CHECK(t4.coeff(8) == std::complex<double>(2.0));
    for (int k : {0, 1, 2, 3, 5, 6, 7}) CHECK(t4.coeff(k) == std::complex<double>(0.0));

    // b_m zbar^m -> the constant b_m
    const UniPoly t2 = associated_poly(BiPolyC::monomial(0, 2, {0.0, 2.0}));
    CHECK(t2.degree() == 0);
    CHECK(t2.coeff(0) == std::complex<double>(0.0, 2.0));

    CHECK_THROWS_AS(associated_poly(Z + c(1)), NotHomogeneous);
    CHECK_THROWS_AS(associated_poly(BiPolyC()), ZeroPolynomial);
}

TEST_CASE("homogeneous coefficient norms") {
    const BiPolyC f3 = BiPolyC::monomial(1, 4, 1.0) + BiPolyC::monomial(1, 2, 1.0) + c(3);
    const auto norms = homogeneous_coeff_norms(f3);
    REQUIRE(norms.size() == 3);
    CHECK(norms[0] == std::pair<int, double>{5, 1.0});
    CHECK(norms[1] == std::pair<int, double>{3, 1.0});
    CHECK(norms[2] == std::pair<int, double>{0, 3.0});

    CHECK(homogeneous_coeff_norms(BiPolyC()).empty());

    const auto n2 = homogeneous_coeff_norms(BiPolyC::monomial(4, 1, 2.0) +
                                            BiPolyC::monomial(2, 3, 1.0));
    REQUIRE(n2.size() == 1);
    CHECK(n2[0] == std::pair<int, double>{5, 3.0});
}

TEST_CASE("evaluation is a ring homomorphism at random points") {
    auto rng = make_rng(2026);
    for (int trial = 0; trial < 10; ++trial) {
        const BiPolyC a = random_bipoly(rng), b = random_bipoly(rng);
        const BiPolyC sum = a + b, prod = a * b;
        for (int k = 0; k < 100; ++k) {
            const auto w = random_point(rng);
            CHECK(close(sum.eval(w), a.eval(w) + b.eval(w), 1e-10));
            CHECK(close(prod.eval(w), a.eval(w) * b.eval(w), 1e-10));
        }
    }
}

TEST_CASE("degree is additive under multiplication") {
    auto rng = make_rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const BiPolyC a = random_bipoly(rng), b = random_bipoly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("top component identity on the unit circle") {
    // T(e^{ia}) = e^{-i d a} * tilde_T(e^{ia}) for homogeneous T
    auto rng = make_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const BiPolyC p = random_bipoly(rng);
        const BiPolyC T = p.top_component();
        const UniPoly tilde = associated_poly(T);
        const int d = T.degree();
        for (int k = 0; k < 8; ++k) {
            const double alpha = 2.0 * std::numbers::pi * (k + 0.3) / 8.0;
            const auto w = std::polar(1.0, alpha);
            const auto lhs = T.eval(w);
            const auto rhs = std::polar(1.0, -d * alpha) * tilde.eval(w);
            CHECK(close(lhs, rhs, 1e-10));
        }
    }
}

TEST_CASE("homogeneity of the top component") {
    auto rng = make_rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const BiPolyC T = random_bipoly(rng).top_component();
        const int d = T.degree();
        const auto w = random_point(rng);
        for (double k : {0.5, 2.0, 3.7}) {
            CHECK(close(std::abs(T.eval(k * w)), std::pow(k, d) * std::abs(T.eval(w)),
                        1e-10));
        }
    }
}

TEST_CASE("associated polynomial has even powers only") {
    auto rng = make_rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const UniPoly tilde = associated_poly(random_bipoly(rng).top_component());
        for (int k = 1; k <= tilde.degree(); k += 2)
            CHECK(tilde.coeff(k) == std::complex<double>(0.0));
    }
}

TEST_CASE("conjugate mirrors evaluation") {
    auto rng = make_rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const BiPolyC p = random_bipoly(rng);
        const auto w = random_point(rng);
        CHECK(close(p.conjugate().eval(w), std::conj(p.eval(w)), 1e-12));
    }
}

TEST_CASE("exact rational arithmetic stays exact") {
    const GaussianRational half(Rational(1, 2));
    const GaussianRational third(Rational(1, 3));
    const BiPolyQ p = BiPolyQ::monomial(1, 1, half) + BiPolyQ::constant(third);
    const BiPolyQ q = p + p;
    CHECK(q.coeff(1, 1) == GaussianRational(Rational(1)));
    CHECK(q.coeff(0, 0) == GaussianRational(Rational(2, 3)));
    const BiPolyQ prod = p * p;
    CHECK(prod.coeff(2, 2) == GaussianRational(Rational(1, 4)));
    CHECK(prod.coeff(1, 1) == GaussianRational(Rational(1, 3)));
    CHECK(prod.coeff(0, 0) == GaussianRational(Rational(1, 9)));
    CHECK((p - p).is_zero());
}

TEST_CASE("unipoly basics") {
    const UniPoly p({{1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}});  // 1 + 2 z^2
    CHECK(p.degree() == 2);
    CHECK(close(p.eval({1.0, 1.0}), std::complex<double>(1.0) + 2.0 * std::complex<double>(0.0, 2.0), 1e-15));
    CHECK(p.circle_lipschitz() == doctest::Approx(4.0));
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly(std::vector<std::complex<double>>{{0.0, 0.0}}).is_zero());

    const UniPoly q = p.reversed();  // z^2 + 2
    CHECK(q.coeff(0) == std::complex<double>(2.0));
    CHECK(q.coeff(2) == std::complex<double>(1.0));
}
