#include "satkit/polyexpr.hpp"

#include <algorithm>
#include <cctype>

namespace satkit {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Bindings& bindings) : text_(text), bindings_(bindings) {}

    LaurentPoly parse_all() {
        LaurentPoly value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_str(std::string_view s) {
        skip_ws();
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static bool starts_primary(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(';
    }

    LaurentPoly expr() {
        LaurentPoly value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const LaurentPoly den = unary();
                if (den.is_zero()) fail("division by zero");
                value = exact_div(value, den);
            } else if (starts_primary(peek())) {
                value *= unary();
            } else {
                return value;
            }
        }
    }

    LaurentPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const long e = as_int(primary(), "exponent");
        if (e > 100000) fail("exponent too large");
        const int exponent = static_cast<int>(negative ? -e : e);
        if (exponent >= 0) return base.pow(static_cast<unsigned>(exponent));
        // Negative powers exist only for monomials.
        if (base.term_count() != 1 || (base.lowest_coeff() != 1 && base.lowest_coeff() != -1)) {
            fail("negative power of a non-unit " + base.str());
        }
        const int be = base.min_exp();
        const Integer c = base.lowest_coeff();
        const Integer sign = (-exponent) % 2 == 1 ? c : Integer(1);
        return LaurentPoly::monomial(sign, be * exponent);
    }

    long as_int(const LaurentPoly& p, const char* what) {
        if (!p.is_constant()) fail(std::string(what) + " must be an integer constant, got " + p.str());
        const Integer c = p.coeff(0);
        if (!c.fits_slong_p()) fail(std::string(what) + " out of range");
        return c.get_si();
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    LaurentPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly value = expr();
            expect(')');
            return value;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LaurentPoly(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name = identifier();
            if (name == "t") return LaurentPoly::t();
            if (name == "prod") return product();
            auto it = bindings_.find(name);
            if (it == bindings_.end()) fail("unbound name '" + name + "'");
            return LaurentPoly(it->second);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    LaurentPoly product() {
        expect('(');
        const std::string var = identifier();
        if (var.empty() || var == "t") fail("prod needs an index name");
        expect('=');
        const long lo = as_int(expr(), "prod lower bound");
        if (!accept_str("..")) fail("expected '..'");
        const long hi = as_int(expr(), "prod upper bound");
        expect(',');
        const std::size_t body_start = pos_;
        std::size_t body_end = body_start;
        LaurentPoly result(1);
        // The body is parsed at least once so an empty range still checks syntax.
        for (long i = lo; i <= std::max(hi, lo); ++i) {
            Bindings scoped = bindings_;
            scoped[var] = i;
            Parser inner(text_, scoped);
            inner.pos_ = body_start;
            const LaurentPoly factor = inner.expr();
            body_end = inner.pos_;
            if (i <= hi) result *= factor;
        }
        pos_ = body_end;
        expect(')');
        return result;
    }

    std::string_view text_;
    const Bindings& bindings_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly eval_poly_expr(std::string_view text, const Bindings& bindings) {
    return Parser(text, bindings).parse_all();
}

long eval_int_expr(std::string_view text, const Bindings& bindings) {
    const LaurentPoly p = eval_poly_expr(text, bindings);
    if (!p.is_constant()) throw ParseError("\"" + std::string(text) + "\" is not an integer constant");
    const Integer c = p.coeff(0);
    if (!c.fits_slong_p()) throw ParseError("\"" + std::string(text) + "\" is out of range");
    return c.get_si();
}

std::string substitute_braces(std::string_view text, const Bindings& bindings) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '{') {
            if (text[i] == '}') throw ParseError("unmatched '}' in \"" + std::string(text) + "\"");
            out += text[i++];
            continue;
        }
        const std::size_t close = text.find('}', i);
        if (close == std::string_view::npos) throw ParseError("unmatched '{' in \"" + std::string(text) + "\"");
        out += std::to_string(eval_int_expr(text.substr(i + 1, close - i - 1), bindings));
        i = close + 1;
    }
    return out;
}

}  // namespace satkit
