#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cycubic/errors.hpp"
#include "cycubic/poly.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

/// "p/q" or "p", optional leading sign, arbitrary precision.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> BigInt {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digit", i);
        BigInt v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return neg ? BigInt(-v) : v;
    };
    skip_ws();
    BigInt num = read_int();
    skip_ws();
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        den = read_int();
        skip_ws();
    }
    if (i != text.size()) throw ParseError("unexpected trailing input", i);
    return Rational(num, den);
}

namespace detail {

enum class TokKind { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    BigInt value; // Number only
    std::size_t pos;
};

class PolyLexer {
public:
    explicit PolyLexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokKind::End, 0, start};
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            current_ = {TokKind::Number, v, start};
            return;
        }
        ++pos_;
        switch (c) {
        case 'x': current_ = {TokKind::Variable, 0, start}; return;
        case '+': current_ = {TokKind::Plus, 0, start}; return;
        case '-': current_ = {TokKind::Minus, 0, start}; return;
        case '*': current_ = {TokKind::Star, 0, start}; return;
        case '/': current_ = {TokKind::Slash, 0, start}; return;
        case '^': current_ = {TokKind::Caret, 0, start}; return;
        case '(': current_ = {TokKind::LParen, 0, start}; return;
        case ')': current_ = {TokKind::RParen, 0, start}; return;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{TokKind::End, 0, 0};
};

/// Recursive-descent parser for the expression grammar:
///   expr  := term { ('+'|'-') term }
///   term  := unary { '*' unary }
///   unary := { ('+'|'-') } power
///   power := atom [ '^' NUMBER ]
///   atom  := NUMBER [ '/' NUMBER ] | 'x' | '(' expr ')'
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : lex_(text) {}

    Poly parse() {
        Poly p = expr();
        if (lex_.peek().kind != TokKind::End)
            throw ParseError("expected operator or end of input", lex_.peek().pos);
        return p;
    }

private:
    Poly expr() {
        Poly acc = term();
        for (;;) {
            TokKind k = lex_.peek().kind;
            if (k == TokKind::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == TokKind::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (lex_.peek().kind == TokKind::Star) {
            lex_.take();
            acc = acc * unary();
        }
        return acc;
    }

    Poly unary() {
        bool neg = false;
        while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
            if (lex_.take().kind == TokKind::Minus) neg = !neg;
        }
        Poly p = power();
        return neg ? -p : p;
    }

    Poly power() {
        Poly base = atom();
        if (lex_.peek().kind != TokKind::Caret) return base;
        std::size_t pos = lex_.take().pos;
        Token e = lex_.take();
        if (e.kind != TokKind::Number) throw ParseError("expected integer exponent", pos);
        if (e.value > 4096) throw ParseError("exponent too large", e.pos);
        unsigned n = e.value.convert_to<unsigned>();
        Poly acc = Poly::constant(Rational(1));
        for (unsigned i = 0; i < n; ++i) acc = acc * base;
        return acc;
    }

    Poly atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case TokKind::Number: {
            BigInt num = t.value;
            if (lex_.peek().kind == TokKind::Slash) {
                std::size_t pos = lex_.take().pos;
                Token d = lex_.take();
                if (d.kind != TokKind::Number) throw ParseError("expected denominator", pos);
                if (d.value == 0) throw ParseError("zero denominator", d.pos);
                return Poly::constant(Rational(num, d.value));
            }
            return Poly::constant(Rational(num));
        }
        case TokKind::Variable: return Poly::x();
        case TokKind::LParen: {
            Poly inner = expr();
            Token close = lex_.take();
            if (close.kind != TokKind::RParen) throw ParseError("expected ')'", close.pos);
            return inner;
        }
        default: throw ParseError("expected number, 'x' or '('", t.pos);
        }
    }

    PolyLexer lex_;
};

} // namespace detail

/// Expression syntax, e.g. "x^3-3*x+1" or "1/3*x^2 - x - 6".
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Comma-separated coefficients in descending degree, e.g. "1,0,-3,1".
inline Poly parse_poly_coeffs(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (i == start) throw ParseError("empty coefficient", start);
            coeffs.push_back(parse_rational(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return Poly::from_coeffs_descending(std::move(coeffs));
}

/// Canonical expression form, descending degree, fractions explicit:
/// "x^3 - 3*x + 1", "1/3*x^2 - x - 6", "0".
inline std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = *p.degree(); i >= 0; --i) {
        const Rational& c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        const bool first = out.empty();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational mag = abs(c);
        const bool show_coeff = i == 0 || !(mag == Rational(1));
        if (show_coeff) out += mag.to_string();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace cycubic
