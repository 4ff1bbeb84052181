#pragma once

// Text grammar for algebra elements.
//
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := atom (('*')? atom)*          (juxtaposition multiplies)
//   atom     := '(' expr ')' | rational | qpower | gen ('^' nat)?
//   gen      := 'a' | 'a^*' | 'c' | 'c^*'
//   qpower   := 'q' ('^' qexp)?              (bare 'q' means q^1)
//   qexp     := int | '(' int ('/' '2')? ')' (half-integer powers allowed)
//   rational := nat ('/' nat)?
//
// The involution is spelled '^*', so '*' on its own is always
// multiplication; whitespace is insignificant.  Generator exponents must be
// positive integers: the algebra has no inverses, and exponent 0 is rejected
// with a dedicated message.  Parsing returns the element in normal form, so
// round-tripping through the canonical renderer is the identity.

#include "algebra.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace suq {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("syntax error at position " +
                             std::to_string(pos + 1) + ": " + what),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    AlgebraElement run() {
        skip_ws();
        if (eof()) throw ParseError(pos_, "expected an expression");
        AlgebraElement r = parse_expr();
        skip_ws();
        if (!eof())
            throw ParseError(pos_, std::string("unexpected character '") +
                                       s_[pos_] + "'");
        return r;
    }

private:
    AlgebraElement parse_expr() {
        AlgebraElement acc;
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        AlgebraElement t = parse_term();
        acc = neg ? Scalar(-1) * t : t;
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                bool minus = (take() == '-');
                AlgebraElement nxt = parse_term();
                if (minus)
                    acc -= nxt;
                else
                    acc += nxt;
            } else {
                break;
            }
        }
        return acc;
    }

    AlgebraElement parse_term() {
        AlgebraElement prod = parse_atom();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
                if (!at_atom_start())
                    throw ParseError(pos_, "expected a factor after '*'");
                prod = prod * parse_atom();
            } else if (at_atom_start()) {
                prod = prod * parse_atom();
            } else {
                break;
            }
        }
        return prod;
    }

    AlgebraElement parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            take();
            AlgebraElement e = parse_expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError(pos_, "expected ')'");
            take();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_rational();
            return AlgebraElement::monomial(BasisIndex{0, 0, 0}, Scalar(r));
        }
        if (c == 'q') {
            take();
            long ue = 2; // bare q
            skip_ws();
            if (peek() == '^') {
                take();
                ue = parse_q_exponent();
            }
            return AlgebraElement::monomial(BasisIndex{0, 0, 0},
                                            Scalar::u_pow(ue));
        }
        if (c == 'a' || c == 'c') {
            take();
            bool starred = false;
            long e = 1;
            skip_ws();
            if (peek() == '^') {
                take();
                skip_ws();
                if (peek() == '*') {
                    take();
                    starred = true;
                    skip_ws();
                    if (peek() == '^') {
                        take();
                        e = parse_generator_exponent(start);
                    }
                } else {
                    e = parse_generator_exponent(start);
                }
            }
            BasisIndex idx{0, 0, 0};
            if (c == 'a')
                idx.k = starred ? -e : e;
            else if (starred)
                idx.n = e;
            else
                idx.m = e;
            return AlgebraElement::monomial(idx);
        }
        if (eof()) throw ParseError(pos_, "unexpected end of input");
        throw ParseError(pos_,
                         std::string("unexpected character '") + c + "'");
    }

    // exponent of a generator: a positive integer
    long parse_generator_exponent(std::size_t gen_start) {
        skip_ws();
        if (peek() == '-')
            throw ParseError(pos_,
                             "generator exponent must be positive (the "
                             "algebra has no inverses)");
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected an exponent");
        long e = parse_natural();
        if (e == 0)
            throw ParseError(gen_start,
                             "exponent 0 is rejected: generator exponents "
                             "must be at least 1");
        if (e > 100000)
            throw ParseError(gen_start, "exponent is too large");
        return e;
    }

    // exponent after 'q^': int, or '(' int ['/2'] ')'; returned in halves
    long parse_q_exponent() {
        skip_ws();
        std::size_t at = pos_;
        auto capped = [&](long num) {
            if (num > 500 || num < -500)
                throw ParseError(at, "exponent is too large");
            return num;
        };
        if (peek() == '(') {
            take();
            long num = capped(parse_integer());
            long ue = 2 * num;
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                std::size_t dpos = pos_;
                long den = parse_natural();
                if (den != 2)
                    throw ParseError(
                        dpos, "only halves are allowed in exponents");
                ue = num;
            }
            skip_ws();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            take();
            return ue;
        }
        return 2 * capped(parse_integer());
    }

    Rational parse_rational() {
        Integer num = parse_big_natural();
        skip_ws();
        std::size_t save = pos_;
        if (peek() == '/') {
            take();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                // not a fraction after all (e.g. nothing sensible follows);
                // a '/' can only continue a rational here
                throw ParseError(pos_, "expected a denominator");
            }
            Integer den = parse_big_natural();
            if (den == 0) throw ParseError(save, "division by zero");
            return Rational(num, den);
        }
        return Rational(num);
    }

    long parse_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected an integer");
        long v = parse_natural();
        return neg ? -v : v;
    }

    long parse_natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected a number");
        long v = 0;
        std::size_t digits = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (++digits > 9)
                throw ParseError(pos_, "exponent is too large");
        }
        return v;
    }

    Integer parse_big_natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(pos_, "expected a number");
        Integer v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (take() - '0');
        return v;
    }

    bool at_atom_start() {
        char c = peek();
        return c == '(' || c == 'a' || c == 'c' || c == 'q' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char peek_at(std::size_t off) const {
        return pos_ + off < s_.size() ? s_[pos_ + off] : '\0';
    }
    char take() { return s_[pos_++]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Parse an expression into its normal form.
inline AlgebraElement parse_expr(const std::string& text) {
    return detail::ExprParser(text).run();
}

} // namespace suq
