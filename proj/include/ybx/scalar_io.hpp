#pragma once

#include "ybx/poly.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ybx {

// Scalar text grammar shared by all file formats and the CLI:
//   rational := ['-'] digits ['/' digits]
//   gauss    := rational [('+'|'-') rational '*'? 'i'] | rational 'i'
//   term     := gauss ('*' ident ('^' digits)?)*
//   poly     := term (('+'|'-') term)*
// '+' and '-' always separate terms; a complex coefficient is written as
// its real and imaginary terms ("-3+2i"), which sums to the same value.

namespace detail {

struct ScalarLexer {
    explicit ScalarLexer(const std::string& s) : s_(s) {}

    enum class Tok { num, ident, plus, minus, star, caret, end };

    Tok peek() {
        skip_ws();
        if (pos_ >= s_.size())
            return Tok::end;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Tok::num;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return Tok::ident;
        switch (c) {
            case '+': return Tok::plus;
            case '-': return Tok::minus;
            case '*': return Tok::star;
            case '^': return Tok::caret;
            default: throw Error(std::string("unexpected character '") + c + "' in scalar");
        }
    }

    void expect(Tok t) {
        if (peek() != t)
            throw Error("malformed scalar near \"" + s_.substr(pos_) + "\"");
        if (t != Tok::end)
            ++pos_;
    }

    Rational read_rational() {
        skip_ws();
        Rational num = read_digits();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            Rational den = read_digits();
            if (den == 0)
                throw Error("zero denominator in scalar");
            return num / den;
        }
        return num;
    }

    unsigned read_exponent() {
        skip_ws();
        Rational d = read_digits();
        return static_cast<unsigned>(numerator(d).convert_to<unsigned long>());
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            throw Error("expected identifier in scalar");
        return s_.substr(start, pos_ - start);
    }

private:
    Rational read_digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw Error("expected digits in scalar");
        return Rational(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    const std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse one scalar over `ring` (pass nullptr for pure constants).
inline Poly parse_scalar(const std::string& text, const RingPtr& ring) {
    using Lexer = detail::ScalarLexer;
    using Tok = Lexer::Tok;
    Lexer lex(text);

    auto parse_term = [&](bool negative) {
        GaussRat coef(1);
        std::map<std::string, unsigned> expo;
        bool first = true;
        for (;;) {
            Tok t = lex.peek();
            if (t == Tok::star) {
                lex.expect(Tok::star);
                t = lex.peek();
                first = false;
            } else if (!first && t != Tok::num && t != Tok::ident) {
                break;  // term ends at +, - or end of input
            }
            if (t == Tok::num) {
                coef *= GaussRat(lex.read_rational());
            } else if (t == Tok::ident) {
                std::string name = lex.read_ident();
                unsigned e = 1;
                if (lex.peek() == Tok::caret) {
                    lex.expect(Tok::caret);
                    e = lex.read_exponent();
                }
                if (name == "i") {
                    for (unsigned k = 0; k < e; ++k)
                        coef *= GaussRat::i();
                } else if (ring && ring->index(name)) {
                    expo[name] += e;
                } else {
                    throw Error("parameter \"" + name + "\" is not declared" +
                                (ring ? " in the ring" : " (constant scalar expected)"));
                }
            } else if (first) {
                throw Error("malformed scalar \"" + text + "\"");
            } else {
                break;
            }
            first = false;
        }
        Poly term = Poly::constant(ring, negative ? -coef : coef);
        for (const auto& [name, e] : expo)
            for (unsigned k = 0; k < e; ++k)
                term *= Poly::param(ring, name);
        return term;
    };

    Poly result = Poly::constant(ring, GaussRat(0));
    bool negative = false;
    if (lex.peek() == Tok::minus) {
        lex.expect(Tok::minus);
        negative = true;
    } else if (lex.peek() == Tok::plus) {
        lex.expect(Tok::plus);
    }
    result += parse_term(negative);
    for (;;) {
        Tok t = lex.peek();
        if (t == Tok::end)
            break;
        if (t == Tok::plus) {
            lex.expect(Tok::plus);
            result += parse_term(false);
        } else if (t == Tok::minus) {
            lex.expect(Tok::minus);
            result += parse_term(true);
        } else {
            throw Error("malformed scalar \"" + text + "\"");
        }
    }
    return result;
}

inline GaussRat parse_gauss(const std::string& text) {
    return parse_scalar(text, nullptr).constant_value();
}

namespace detail {

/// One printed (sign, body) piece: magnitude * [i] * monomial.
inline void append_piece(std::string& out, bool first, bool negative,
                         const Rational& magnitude, bool imaginary,
                         const std::string& monomial) {
    if (negative)
        out += '-';
    else if (!first)
        out += '+';
    std::string head;
    if (imaginary)
        head = (magnitude == 1) ? "i" : rational_str(magnitude) + "i";
    else if (magnitude != 1 || monomial.empty())
        head = rational_str(magnitude);
    if (!head.empty() && !monomial.empty())
        out += head + "*" + monomial;
    else if (!head.empty())
        out += head;
    else
        out += monomial;
}

}  // namespace detail

/// Canonical text form: graded-lex descending terms, real part before
/// imaginary part of each coefficient, no whitespace.
inline std::string scalar_str(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string mono;
        for (std::size_t k = 0; k < it->first.size(); ++k) {
            unsigned e = it->first[k];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += p.ring()->name(k);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        const GaussRat& c = it->second;
        if (c.re() != 0) {
            detail::append_piece(out, first, c.re() < 0, abs(c.re()), false, mono);
            first = false;
        }
        if (c.im() != 0) {
            detail::append_piece(out, first, c.im() < 0, abs(c.im()), true, mono);
            first = false;
        }
    }
    return out;
}

inline std::string scalar_str(const GaussRat& c) { return scalar_str(Poly(c)); }

}  // namespace ybx
