#include "cremona/parse.hpp"

#include <cctype>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

class Parser {
public:
    Parser(std::string_view text, int ambient_n) : text_(text), n_(ambient_n) {}

    Polynomial run() {
        skip_space();
        Polynomial p = parse_expr();
        skip_space();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(message, line_, column_);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool eat(char c) {
        skip_space();
        if (at_end() || peek() != c) return false;
        advance();
        return true;
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            skip_space();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_unary();
        while (eat('*')) acc = acc * parse_unary();
        return acc;
    }

    Polynomial parse_unary() {
        if (eat('-')) return -parse_unary();
        return parse_primary();
    }

    BigInt parse_integer_literal() {
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer literal");
        BigInt value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            value = value * 10 + (advance() - '0');
        return value;
    }

    int parse_exponent() {
        skip_space();
        if (!at_end() && peek() == '-') fail("negative exponent");
        const BigInt e = parse_integer_literal();
        if (e > 1000000) fail("exponent too large");
        return static_cast<int>(e);
    }

    Polynomial parse_primary() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();

        if (c == '(') {
            advance();
            Polynomial inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) return poly_pow(inner, parse_exponent());
            return inner;
        }

        if (c == 'X') {
            advance();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected a variable index after 'X'");
            BigInt index = 0;
            int digits = 0;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                index = index * 10 + (advance() - '0');
                ++digits;
                if (digits > 6) fail("variable index too long");
            }
            if (index > 99) fail("variable index above X99");
            if (index > n_)
                fail("variable X" + index.str() + " exceeds ambient dimension " +
                     std::to_string(n_));
            Polynomial v = Polynomial::variable(n_, static_cast<int>(index));
            if (eat('^')) return poly_pow(v, parse_exponent());
            return v;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            const BigInt num = parse_integer_literal();
            skip_space();
            if (!at_end() && peek() == '/') {
                advance();
                const BigInt den = parse_integer_literal();
                if (den == 0) fail("zero denominator in rational literal");
                return Polynomial::constant(n_, Rational(num, den));
            }
            return Polynomial::constant(n_, Rational(num));
        }

        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int ambient_n) {
    if (ambient_n < 0) throw precondition_error("parse_polynomial: negative ambient dimension");
    return Parser(text, ambient_n).run();
}

}  // namespace cremona
