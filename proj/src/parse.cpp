#include "jacpair/parse.hpp"

#include <cctype>
#include <string>

namespace jacpair {

namespace {

class Parser {
public:
    Parser(std::string_view text, bool laurent) : text_(text), laurent_(laurent) {}

    LaurentPoly run() {
        LaurentPoly out = expr();
        skip_ws();
        if (pos_ != text_.size()) die("unexpected trailing input");
        return out;
    }

private:
    std::string_view text_;
    bool laurent_;
    std::size_t pos_ = 0;

    [[noreturn]] void die(const std::string& what) const {
        fail(errc::syntax_error, "offset " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        bool neg = eat('-');
        LaurentPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    LaurentPoly factor() {
        LaurentPoly b = base();
        if (!eat('^')) return b;
        long e = integer();
        if (e >= 0) return b.pow(static_cast<unsigned long>(e));
        if (!laurent_)
            fail(errc::negative_exponent,
                 "offset " + std::to_string(pos_) + ": negative exponent outside Laurent mode");
        if (!b.is_monomial())
            fail(errc::negative_exponent,
                 "offset " + std::to_string(pos_) + ": negative exponent on a non-monomial base");
        auto [be, bc] = b.leading_term();
        if (bc == 0) die("zero base with negative exponent");
        LaurentPoly out = LaurentPoly::constant(1);
        LaurentPoly inv = LaurentPoly::monomial(Rat(1) / bc, -be.i, -be.j);
        for (long i = 0; i < -e; ++i) out = out * inv;
        return out;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            die("expected an integer");
        long val = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            val = val * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -val : val;
    }

    LaurentPoly base() {
        int c = peek();
        if (c == 'x') {
            ++pos_;
            return LaurentPoly::x();
        }
        if (c == 'y') {
            ++pos_;
            return LaurentPoly::y();
        }
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            if (!eat(')')) die("expected ')'");
            return inner;
        }
        if (c >= '0' && c <= '9') return LaurentPoly::constant(rational());
        die("expected a rational, 'x', 'y' or '('");
    }

    Rat rational() {
        Int num = digits();
        if (eat('/')) {
            Int den = digits();
            if (den == 0) die("zero denominator");
            return rat(num, den);
        }
        return Rat(num);
    }

    Int digits() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            die("expected digits");
        std::string buf;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            buf.push_back(text_[pos_]);
            ++pos_;
        }
        return Int(buf);
    }
};

} // namespace

LaurentPoly parse_poly(std::string_view text, bool laurent) {
    return Parser(text, laurent).run();
}

} // namespace jacpair
