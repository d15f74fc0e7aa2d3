#include <doctest.h>

#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/json_io.hpp"
#include "bezout/linear_map.hpp"
#include "bezout/rational.hpp"

using namespace bezout;

TEST_CASE("rational construction and printing") {
    CHECK(make_rational(2, -4) == rat(-1, 2));
    CHECK(parse_rational("7/21") == rat(1, 3));
    CHECK(parse_rational("-3") == rat(-3));
    CHECK(rational_str(rat(-3, 7)) == "-3/7");
    CHECK(rational_str(rat(4)) == "4");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(falling(5, 2) == 20);
    CHECK(falling(5, 0) == 1);
}

TEST_CASE("binary form basics") {
    const BinaryForm f = BinaryForm::monomial(3, 1, rat(2)); // 2 x0^2 x1
    CHECK(f.order() == 3);
    CHECK(f.coeff(1) == rat(2));
    CHECK(f.coeff(2) == 0);
    CHECK(f.coeff(17) == 0);
    CHECK_FALSE(f.is_zero());
    CHECK(BinaryForm(4).is_zero());
    CHECK_FALSE(BinaryForm(4).is_zero_object());
    CHECK(BinaryForm().is_zero_object());
    CHECK(BinaryForm::constant(rat(5)).order() == 0);
    CHECK_THROWS_AS(BinaryForm(-1, {rat(1)}), DomainError);
}

TEST_CASE("binary form arithmetic and calculus") {
    const BinaryForm a = parse_form("x0^2 + 2*x0*x1");
    const BinaryForm b = parse_form("x0*x1 - x1^2");
    CHECK((a + b) == parse_form("x0^2 + 3*x0*x1 - x1^2"));
    CHECK((a - a).is_zero());
    CHECK((a * b) == parse_form("x0^3*x1 + x0^2*x1^2 - 2*x0*x1^3"));
    CHECK((rat(3) * b) == parse_form("3*x0*x1 - 3*x1^2"));
    CHECK(b.pow(2) == parse_form("x0^2*x1^2 - 2*x0*x1^3 + x1^4"));
    CHECK(b.pow(0) == BinaryForm::constant(rat(1)));

    CHECK(parse_form("x0^2*x1").derivative(1, 0) == parse_form("2*x0*x1"));
    CHECK(parse_form("x0^2*x1").derivative(0, 1) == parse_form("x0^2"));
    CHECK(parse_form("x0^2*x1").derivative(2, 1) == BinaryForm::constant(rat(2)));
    CHECK(parse_form("x0").derivative(2, 0).is_zero_object());

    CHECK_THROWS_AS(a + parse_form("x0"), DomainError);
}

TEST_CASE("binary form printing follows the input grammar") {
    CHECK(parse_form("x0*x1").str() == "x0*x1");
    CHECK(BinaryForm(3).str() == "0");
    CHECK(parse_form("x0^2 - 2*x0*x1").str() == "x0^2 - 2*x0*x1");
    CHECK(parse_form("-1/2*x1^2").str() == "-1/2*x1^2");
    const BinaryForm f = parse_form("2*x0^3 - x0*x1^2 + 5/3*x1^3");
    CHECK(parse_form(f.str()) == f);
}

TEST_CASE("binary form exact division") {
    const BinaryForm num = parse_form("x0^2 - x1^2");
    const BinaryForm den = parse_form("x0 - x1");
    CHECK(exact_divide(num, den) == parse_form("x0 + x1"));
    CHECK(exact_divide(BinaryForm(5), parse_form("x0^2")) == BinaryForm(3));
    CHECK_THROWS_AS(exact_divide(parse_form("x0^2 + x1^2"), den), DivisionError);
    CHECK_THROWS_AS(exact_divide(num, BinaryForm(1)), DomainError);
}

TEST_CASE("biform basics") {
    const BiForm w = BiForm::omega();
    CHECK(w.coeff(0, 1) == rat(1));
    CHECK(w.coeff(1, 0) == rat(-1));
    const BinaryForm a = parse_form("x0^2 + x1^2");
    const BinaryForm b = parse_form("x0*x1");
    const BiForm outer = BiForm::outer(a, b);
    CHECK(outer.xorder() == 2);
    CHECK(outer.yorder() == 2);
    CHECK(specialize_y_to_x(outer) == a * b);
    CHECK_FALSE(outer.symmetric());
    CHECK(BiForm::outer(a, a).symmetric());
    CHECK((outer - outer).is_zero());
}

TEST_CASE("biform exact division by omega powers") {
    const BinaryForm a = parse_form("x0^3 - x1^3");
    const BinaryForm b = parse_form("x0^2*x1 + x0*x1^2");
    const BiForm w = BiForm::omega();
    const BiForm p = BiForm::outer(a, b) - BiForm::outer(b, a);
    const BiForm q = exact_divide(p, w);
    CHECK(q * w == p);
    const BiForm w2 = w * w;
    CHECK(exact_divide(p * w2, w2) == p);
    CHECK_THROWS_AS(exact_divide(BiForm::outer(a, b), w), DivisionError);
}

TEST_CASE("linear maps over the rationals") {
    LinearMapQ m(2, 3);
    m.at(0, 0) = rat(1);
    m.at(0, 1) = rat(2);
    m.at(0, 2) = rat(3);
    m.at(1, 0) = rat(2);
    m.at(1, 1) = rat(4);
    m.at(1, 2) = rat(6);
    CHECK(m.rank() == 1);
    const auto kernel = m.kernel_basis();
    REQUIRE(kernel.size() == 2);
    // reduced echelon basis of the plane x + 2y + 3z = 0
    CHECK(kernel[0] == std::vector<Rational>{rat(1), rat(0), rat(-1, 3)});
    CHECK(kernel[1] == std::vector<Rational>{rat(0), rat(1), rat(-2, 3)});

    const auto sol = m.solve({rat(6), rat(12)});
    REQUIRE(sol.has_value());
    CHECK(rat(1) * (*sol)[0] + rat(2) * (*sol)[1] + rat(3) * (*sol)[2] == rat(6));
    CHECK_FALSE(m.solve({rat(1), rat(0)}).has_value());

    LinearMapQ s(2, 2);
    s.at(0, 0) = rat(1);
    s.at(0, 1) = rat(2);
    s.at(1, 0) = rat(3);
    s.at(1, 1) = rat(4);
    CHECK(s.determinant() == rat(-2));
    CHECK(LinearMapQ(0, 0).determinant() == rat(1));
}

TEST_CASE("operator matrices and span rank") {
    const auto map = LinearMapQ::from_operator(
        2, 1, [](const BinaryForm& f) { return f.derivative(1, 0); });
    CHECK(map.rows() == 2);
    CHECK(map.cols() == 3);
    CHECK(map.rank() == 2);
    CHECK(map.kernel_basis().size() == 1);

    const std::vector<BinaryForm> forms = {parse_form("x0^2"), parse_form("x1^2"),
                                           parse_form("x0^2 + x1^2")};
    CHECK(span_rank(forms) == 2);
}

TEST_CASE("form parsing") {
    CHECK(parse_form("(x0 + x1)^2") == parse_form("x0^2 + 2*x0*x1 + x1^2"));
    CHECK(parse_form("3/2*x0*x1 - x1^2").coeff(1) == rat(3, 2));
    CHECK(parse_form("0", 4) == BinaryForm(4));
    CHECK(parse_form("7").order() == 0);
    CHECK_THROWS_AS(parse_form("x0 + x1^2"), ParseError);
    CHECK_THROWS_AS(parse_form("x2"), ParseError);
    CHECK_THROWS_AS(parse_form("x0 +"), ParseError);
    CHECK_THROWS_AS(parse_form("x0^2", 3), ParseError);
}

TEST_CASE("json round-trips") {
    const BinaryForm f = parse_form("x0^3 - 5/2*x0*x1^2");
    CHECK(form_from_json(form_to_json(f)) == f);
    const BiForm b = BiForm::outer(f, parse_form("x0 + x1"));
    CHECK(biform_from_json(biform_to_json(b)) == b);
    CHECK_THROWS_AS(form_from_json(nlohmann::json{{"order", 2}}), ParseError);
}
