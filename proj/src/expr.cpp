#include "altgamma/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace altgamma {
namespace {

struct Parser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what +
                                    " in '" + std::string(src) + "'");
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(std::string(src.substr(start, pos - start)));
    }

    // Variables are single letters, so "xy" and "6xy" denote products.
    std::string ident() {
        skip_ws();
        return std::string(1, src[pos++]);
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)))
            return Poly::variable(ident());
        fail("expected a number, variable or '('");
    }

    Poly factor() {
        Poly p = primary();
        for (;;) {
            if (eat('^')) {
                Int e = integer();
                if (e < 0 || e > 1000000) fail("exponent out of range");
                p = pow(p, static_cast<unsigned>(e));
            } else if (eat('/')) {
                Int q = integer();
                p.scale(Rational(Int(1), q));
            } else {
                break;
            }
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (eat('*')) {
                p *= factor();
            } else if (starts_factor()) {  // juxtaposition
                p *= factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly expression() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Poly p = term();
        if (negate) p = -p;
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                break;
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(std::string_view src) {
    Parser p{src};
    Poly result = p.expression();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    return result;
}

}  // namespace altgamma
