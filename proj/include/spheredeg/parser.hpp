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

#ifndef SPHEREDEG_PARSER_HPP
#define SPHEREDEG_PARSER_HPP

#include <complex>
#include <memory>
#include <string_view>

#include "spheredeg/bipoly.hpp"
#include "spheredeg/rational.hpp"

namespace spheredeg {

/// Expression grammar (the CLI input contract):
///
///   expression := term (('+' | '-') term)*
///   term       := factor ('*' factor)*
///   factor     := ('-' | '+') factor | power
///   power      := atom ['^' exponent]          -- '^' right-associative
///   atom       := literal | 'z' | 'zbar' | 'i' | 'conj' '(' expression ')'
///               | '(' expression ')'
///   literal    := decimal ['/' integer]        -- e.g. 2, 1.5, 3/2, 2e-3
///
/// `zbar` and `conj(z)` are synonyms, whitespace is insignificant, exponents
/// are nonnegative integer literals, implicit multiplication is not
/// supported, and there is no division beyond rational literals: a map is
/// always given as two separate expressions f and g.

enum class ExprKind { constant, var_z, conj, neg, add, sub, mul, pow };

struct Expr {
    ExprKind kind;
    GaussianRational value;  // constant
    int exponent = 0;        // pow
    std::unique_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parses the source text. Throws SyntaxError (with byte offset and the
/// expected-token set), NonIntegerExponent or NegativeExponent.
ExprPtr parse(std::string_view src);

/// Lowers an AST to a polynomial in z and conj(z); conjugation distributes
/// down to the leaves. The result evaluates identically to the AST.
BiPolyQ lower(const Expr& ast);

/// Direct recursive evaluation of the AST at a point, used to cross-check
/// lowering.
std::complex<double> interpret(const Expr& ast, std::complex<double> w);

/// parse + lower in one step.
BiPolyQ parse_bipoly(std::string_view src);

}  // namespace spheredeg

#endif  // SPHEREDEG_PARSER_HPP
