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

#include "spheredeg/parser.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational number;       // Tok::number (always nonnegative; sign is a separate token)
    std::string ident;     // Tok::ident
    bool number_from_decimal = false;  // had '.' or exponent notation
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::caret: return "'^'";
        case Tok::slash: return "'/'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::end: return "end of input";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, pos_, {}, {}});
                return out;
            }
            const std::size_t at = pos_;
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                out.push_back(lex_number());
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = pos_;
                while (j < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                    ++j;
                Token t{Tok::ident, at, {}, std::string(src_.substr(pos_, j - pos_))};
                pos_ = j;
                out.push_back(std::move(t));
            } else {
                Tok k;
                switch (c) {
                    case '+': k = Tok::plus; break;
                    case '-': k = Tok::minus; break;
                    case '*': k = Tok::star; break;
                    case '^': k = Tok::caret; break;
                    case '/': k = Tok::slash; break;
                    case '(': k = Tok::lparen; break;
                    case ')': k = Tok::rparen; break;
                    default:
                        throw SyntaxError(at, {"number", "'z'", "'i'", "'('", "operator"},
                                          std::string("unexpected character '") + c +
                                              "' at offset " + std::to_string(at));
                }
                ++pos_;
                out.push_back({k, at, {}, {}});
            }
        }
    }

  private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    Token lex_number() {
        const std::size_t at = pos_;
        std::int64_t mantissa = 0;
        int frac_digits = 0;
        bool any_digit = false, decimal_form = false;

        auto push_digit = [&](char d) {
            if (mantissa > (INT64_MAX - (d - '0')) / 10)
                throw SyntaxError(at, {"shorter numeric literal"},
                                  "numeric literal too large at offset " + std::to_string(at));
            mantissa = mantissa * 10 + (d - '0');
            any_digit = true;
        };

        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            push_digit(src_[pos_++]);
        if (pos_ < src_.size() && src_[pos_] == '.') {
            decimal_form = true;
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                push_digit(src_[pos_++]);
                ++frac_digits;
            }
        }
        if (!any_digit)
            throw SyntaxError(at, {"digit"}, "malformed number at offset " + std::to_string(at));

        int exp10 = 0;
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            decimal_form = true;
            std::size_t save = pos_;
            ++pos_;
            int sign = 1;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                if (src_[pos_] == '-') sign = -1;
                ++pos_;
            }
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                int e = 0;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    e = e * 10 + (src_[pos_] - '0');
                    if (e > 400)
                        throw SyntaxError(at, {"smaller exponent"},
                                          "numeric exponent out of range at offset " +
                                              std::to_string(at));
                    ++pos_;
                }
                exp10 = sign * e;
            } else {
                pos_ = save;  // 'e' was not an exponent marker; leave it for the ident lexer
            }
        }

        Rational value(mantissa);
        try {
            int net = exp10 - frac_digits;
            const Rational ten(10);
            for (; net > 0; --net) value = value * ten;
            for (; net < 0; ++net) value = value / ten;
        } catch (const std::overflow_error&) {
            throw SyntaxError(at, {"smaller numeric literal"},
                              "numeric literal out of exact range at offset " + std::to_string(at));
        }
        return {Tok::number, at, value, {}, decimal_form};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

ExprPtr make(ExprKind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
}

ExprPtr make_const(GaussianRational v) {
    auto e = make(ExprKind::constant);
    e->value = std::move(v);
    return e;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expression();
        expect(Tok::end, {"'+'", "'-'", "'*'", "'^'", "end of input"});
        return e;
    }

  private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() { return toks_[idx_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    bool accept(Tok k) {
        if (!at(k)) return false;
        ++idx_;
        return true;
    }

    void expect(Tok k, std::vector<std::string> expected) {
        if (!accept(k))
            throw SyntaxError(peek().offset, std::move(expected),
                              std::string("expected ") + tok_name(k) + " but found " +
                                  tok_name(peek().kind) + " at offset " +
                                  std::to_string(peek().offset));
    }

    ExprPtr expression() {
        ExprPtr e = term();
        while (at(Tok::plus) || at(Tok::minus)) {
            const bool add = advance().kind == Tok::plus;
            auto node = make(add ? ExprKind::add : ExprKind::sub);
            node->lhs = std::move(e);
            node->rhs = term();
            e = std::move(node);
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept(Tok::star)) {
            auto node = make(ExprKind::mul);
            node->lhs = std::move(e);
            node->rhs = factor();
            e = std::move(node);
        }
        return e;
    }

    ExprPtr factor() {
        if (accept(Tok::minus)) {
            auto node = make(ExprKind::neg);
            node->lhs = factor();
            return node;
        }
        if (accept(Tok::plus)) return factor();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept(Tok::caret)) {
            auto node = make(ExprKind::pow);
            node->lhs = std::move(base);
            node->exponent = exponent();
            return node;
        }
        return base;
    }

    // A nonnegative integer literal, optionally parenthesized with a sign,
    // optionally followed by a right-associative '^' tower: z^2^3 = z^(2^3).
    int exponent() {
        const std::size_t at = peek().offset;
        int value;
        if (accept(Tok::lparen)) {
            bool negative = false;
            if (accept(Tok::minus)) negative = true;
            else accept(Tok::plus);
            value = integer_literal();
            if (negative && value != 0) throw NegativeExponent(at);
            expect(Tok::rparen, {"')'"});
        } else {
            value = integer_literal();
        }
        if (accept(Tok::caret)) {
            const int e = exponent();
            std::int64_t r = 1;
            for (int k = 0; k < e; ++k) {
                r *= value;
                if (r > 4096)
                    throw SyntaxError(at, {"smaller exponent"},
                                      "exponent too large at offset " + std::to_string(at));
            }
            value = static_cast<int>(r);
        }
        return value;
    }

    int integer_literal() {
        if (!at(Tok::number))
            throw SyntaxError(peek().offset, {"nonnegative integer"},
                              std::string("expected integer exponent but found ") +
                                  tok_name(peek().kind) + " at offset " +
                                  std::to_string(peek().offset));
        const Token& t = advance();
        Rational v = t.number;
        if (accept(Tok::slash)) {  // e.g. z^(3/2)
            throw NonIntegerExponent(t.offset);
        }
        if (t.number_from_decimal || v.den() != 1) throw NonIntegerExponent(t.offset);
        if (v.num() > 4096)
            throw SyntaxError(t.offset, {"smaller exponent"},
                              "exponent too large at offset " + std::to_string(t.offset));
        return static_cast<int>(v.num());
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                advance();
                Rational v = t.number;
                if (accept(Tok::slash)) {  // rational literal a/b
                    if (!at(Tok::number) || peek().number_from_decimal ||
                        peek().number.den() != 1)
                        throw SyntaxError(peek().offset, {"integer denominator"},
                                          "expected integer denominator at offset " +
                                              std::to_string(peek().offset));
                    const Token& den = advance();
                    if (den.number.is_zero())
                        throw SyntaxError(den.offset, {"nonzero denominator"},
                                          "zero denominator at offset " +
                                              std::to_string(den.offset));
                    v = v / den.number;
                }
                return make_const(GaussianRational(v));
            }
            case Tok::ident: {
                advance();
                if (t.ident == "z") return make(ExprKind::var_z);
                if (t.ident == "i") return make_const(GaussianRational::unit_i());
                if (t.ident == "zbar") {
                    auto node = make(ExprKind::conj);
                    node->lhs = make(ExprKind::var_z);
                    return node;
                }
                if (t.ident == "conj") {
                    expect(Tok::lparen, {"'('"});
                    auto node = make(ExprKind::conj);
                    node->lhs = expression();
                    expect(Tok::rparen, {"')'"});
                    return node;
                }
                throw SyntaxError(t.offset, {"'z'", "'i'", "'zbar'", "'conj'"},
                                  "unknown identifier '" + t.ident + "' at offset " +
                                      std::to_string(t.offset));
            }
            case Tok::lparen: {
                advance();
                ExprPtr e = expression();
                expect(Tok::rparen, {"')'"});
                return e;
            }
            default:
                throw SyntaxError(t.offset, {"number", "'z'", "'i'", "'zbar'", "'conj'", "'('"},
                                  std::string("expected an operand but found ") +
                                      tok_name(t.kind) + " at offset " +
                                      std::to_string(t.offset));
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

BiPolyQ pow_bipoly(const BiPolyQ& base, int e) {
    BiPolyQ r = BiPolyQ::constant(GaussianRational(1));
    BiPolyQ b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

}  // namespace

ExprPtr parse(std::string_view src) { return Parser(Lexer(src).run()).run(); }

namespace {

BiPolyQ lower_node(const Expr& ast) {
    switch (ast.kind) {
        case ExprKind::constant: return BiPolyQ::constant(ast.value);
        case ExprKind::var_z: return BiPolyQ::var_z();
        case ExprKind::conj: return lower_node(*ast.lhs).conjugate();
        case ExprKind::neg: return -lower_node(*ast.lhs);
        case ExprKind::add: return lower_node(*ast.lhs) + lower_node(*ast.rhs);
        case ExprKind::sub: return lower_node(*ast.lhs) - lower_node(*ast.rhs);
        case ExprKind::mul: return lower_node(*ast.lhs) * lower_node(*ast.rhs);
        case ExprKind::pow: return pow_bipoly(lower_node(*ast.lhs), ast.exponent);
    }
    throw Error("corrupt AST");
}

}  // namespace

BiPolyQ lower(const Expr& ast) {
    try {
        return lower_node(ast);
    } catch (const std::overflow_error& e) {
        // exact coefficients left the 64-bit rational range (say, a huge
        // binomial expansion); surface it as a library error
        throw Error(std::string("exact coefficient overflow: ") + e.what());
    }
}

std::complex<double> interpret(const Expr& ast, std::complex<double> w) {
    switch (ast.kind) {
        case ExprKind::constant: return ast.value.to_complex();
        case ExprKind::var_z: return w;
        case ExprKind::conj: return std::conj(interpret(*ast.lhs, w));
        case ExprKind::neg: return -interpret(*ast.lhs, w);
        case ExprKind::add: return interpret(*ast.lhs, w) + interpret(*ast.rhs, w);
        case ExprKind::sub: return interpret(*ast.lhs, w) - interpret(*ast.rhs, w);
        case ExprKind::mul: return interpret(*ast.lhs, w) * interpret(*ast.rhs, w);
        case ExprKind::pow: {
            std::complex<double> r(1.0), b = interpret(*ast.lhs, w);
            for (int k = 0; k < ast.exponent; ++k) r *= b;
            return r;
        }
    }
    throw Error("corrupt AST");
}

BiPolyQ parse_bipoly(std::string_view src) { return lower(*parse(src)); }

}  // namespace spheredeg
