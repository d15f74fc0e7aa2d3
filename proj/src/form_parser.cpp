#include "bezout/form_parser.hpp"

#include <cctype>
#include <map>

namespace bezout {

namespace {

// Bivariate polynomial in (x0, x1), not necessarily homogeneous, as
// exponent-pair -> coefficient.
using Poly = std::map<std::pair<int, int>, Rational>;

Poly poly_const(const Rational& c) {
    Poly p;
    if (c != 0)
        p[{0, 0}] = c;
    return p;
}

Poly poly_add(const Poly& a, const Poly& b, int sign) {
    Poly r = a;
    for (const auto& [mono, c] : b) {
        r[mono] += sign * c;
        if (r[mono] == 0)
            r.erase(mono);
    }
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto key = std::make_pair(ma.first + mb.first, ma.second + mb.second);
            r[key] += ca * cb;
            if (r[key] == 0)
                r.erase(key);
        }
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("form expression: " + why + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Integer uint_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }

    Poly expr() {
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        Poly p = term();
        if (sign < 0)
            p = poly_add(Poly(), p, -1);
        for (;;) {
            if (eat('+'))
                p = poly_add(p, term(), 1);
            else if (eat('-'))
                p = poly_add(p, term(), -1);
            else
                break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*'))
            p = poly_mul(p, factor());
        return p;
    }

    Poly factor() {
        Poly p = primary();
        if (eat('^')) {
            Integer e = uint_lit();
            if (e > 64)
                fail("exponent too large");
            int n = static_cast<int>(e);
            Poly r = poly_const(Rational(1));
            for (int i = 0; i < n; ++i)
                r = poly_mul(r, p);
            p = r;
        }
        return p;
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = uint_lit();
            if (eat('/')) {
                Integer den = uint_lit();
                if (den == 0)
                    fail("zero denominator");
                return poly_const(make_rational(num, den));
            }
            return poly_const(Rational(num));
        }
        if (c == 'x') {
            ++pos_; // consume 'x' (peek already skipped whitespace)
            if (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
                char v = s_[pos_++];
                Poly p;
                p[v == '0' ? std::make_pair(1, 0) : std::make_pair(0, 1)] = Rational(1);
                return p;
            }
            fail("unknown variable (only x0, x1)");
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            fail("unknown variable (only x0, x1)");
        fail("expected a coefficient, variable, or '('");
    }
};

} // namespace

BinaryForm parse_form(const std::string& text, std::optional<int> expected_order) {
    Poly p = Parser(text).parse();

    if (p.empty()) {
        if (expected_order)
            return BinaryForm::zero(*expected_order);
        return BinaryForm::zero(0);
    }

    int order = p.begin()->first.first + p.begin()->first.second;
    for (const auto& [mono, c] : p) {
        (void)c;
        if (mono.first + mono.second != order)
            throw ParseError("form expression is not homogeneous");
    }
    if (expected_order && *expected_order != order)
        throw ParseError("form has order " + std::to_string(order) + ", expected " +
                         std::to_string(*expected_order));

    std::vector<Rational> coeffs(static_cast<size_t>(order) + 1, Rational(0));
    for (const auto& [mono, c] : p)
        coeffs[static_cast<size_t>(mono.second)] = c;
    return BinaryForm(order, std::move(coeffs));
}

} // namespace bezout
