#include <doctest.h>

#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/transvectant.hpp"

using namespace bezout;

TEST_CASE("transvectants of monomials") {
    CHECK(transvectant(parse_form("x0^2"), parse_form("x1^2"), 1) == parse_form("x0*x1"));
    CHECK(transvectant(parse_form("x0*x1"), parse_form("x0*x1"), 2) ==
          BinaryForm::constant(rat(-1, 2)));
    CHECK(transvectant(parse_form("x0^3"), parse_form("x1^3"), 3) == BinaryForm::constant(rat(1)));
    CHECK(transvectant(parse_form("x0^2"), parse_form("x1^3"), 0) == parse_form("x0^2*x1^3"));
}

TEST_CASE("transvectant index range") {
    const BinaryForm e = parse_form("x0^2 + x1^2");
    const BinaryForm f = parse_form("x0^3 - x0*x1^2");
    CHECK(transvectant(e, f, 3).is_zero());          // r > min(2, 3)
    CHECK(transvectant(e, e, 3).is_zero());          // e + f - 2r < 0
    CHECK_THROWS_AS(transvectant(e, f, -1), DomainError);
    CHECK(transvectant(BinaryForm(), f, 1).is_zero());
}

TEST_CASE("transvectant symmetry and bilinearity") {
    const BinaryForm e = parse_form("x0^3 + 2*x0^2*x1 - x1^3");
    const BinaryForm f = parse_form("x0^3 - 5*x0*x1^2");
    for (int r = 0; r <= 3; ++r) {
        const BinaryForm lhs = transvectant(e, f, r);
        const BinaryForm rhs = transvectant(f, e, r);
        if (r % 2 == 0)
            CHECK(lhs == rhs);
        else
            CHECK(lhs == -rhs);
    }
    CHECK(transvectant(e, e, 1).is_zero());
    CHECK(transvectant(e + f, f, 2) == transvectant(e, f, 2) + transvectant(f, f, 2));
}

TEST_CASE("odd transvectants transform as combinants") {
    const BinaryForm a = parse_form("x0^4 + x0*x1^3");
    const BinaryForm b = parse_form("x0^2*x1^2 - 2*x1^4");
    const BinaryForm a2 = rat(2) * a + rat(3) * b;
    const BinaryForm b2 = rat(1) * a + rat(5) * b;
    const Rational det = rat(2 * 5 - 3 * 1);
    for (int r = 1; r <= 3; r += 2)
        CHECK(transvectant(a2, b2, r) == det * transvectant(a, b, r));
}

TEST_CASE("first transvectant detects proportionality") {
    const BinaryForm a = parse_form("x0^3 - x0*x1^2 + x1^3");
    CHECK(transvectant(a, rat(-7, 3) * a, 1).is_zero());
    CHECK_FALSE(transvectant(a, parse_form("x1^3"), 1).is_zero());
    CHECK(transvectant(a, BinaryForm(3), 1).is_zero());
}

TEST_CASE("polars restrict back to the form") {
    const BinaryForm e = parse_form("x0^4 - 3*x0^2*x1^2 + x1^4");
    for (int m = 0; m <= 4; ++m) {
        const BiForm p = polar(e, m);
        CHECK(p.xorder() == 4 - m);
        CHECK(p.yorder() == m);
        CHECK(specialize_y_to_x(p) == e);
    }
    CHECK_THROWS_AS(polar(e, 5), DomainError);
    CHECK_THROWS_AS(polar(e, -1), DomainError);
}

TEST_CASE("half polarization") {
    const BiForm s = sym_polarize(parse_form("x0*x1"));
    CHECK(s.symmetric());
    CHECK(s == rat(1, 2) * (BiForm::outer(parse_form("x0"), parse_form("x1")) +
                            BiForm::outer(parse_form("x1"), parse_form("x0"))));
    CHECK(sym_polarize(parse_form("x0^4 + x1^4")).symmetric());
    CHECK_THROWS_AS(sym_polarize(parse_form("x0^3")), DomainError);
}

TEST_CASE("gordan parameter legality") {
    CHECK_NOTHROW(GordanParams(1, 1, 1, 2, 2, 2));
    CHECK_NOTHROW(GordanParams(0, 1, 1, 3, 2, 2));
    // a1 != 0 and a2 + a3 < e
    CHECK_THROWS_AS(GordanParams(1, 0, 0, 2, 2, 2), DomainError);
    // a1 + a2 > g
    CHECK_THROWS_AS(GordanParams(1, 1, 1, 2, 2, 1), DomainError);
    // a2 + a3 > e
    CHECK_THROWS_AS(GordanParams(0, 2, 1, 2, 3, 3), DomainError);
    CHECK_THROWS_AS(GordanParams(-1, 1, 1, 2, 2, 2), DomainError);
}

TEST_CASE("gordan series residual vanishes on legal parameters") {
    const BinaryForm e = parse_form("x0^2 + 3*x0*x1 - x1^2");
    const BinaryForm f = parse_form("2*x0^2 - x1^2");
    const BinaryForm g = parse_form("x0^2 - x0*x1");
    CHECK(gordan_residual(e, f, g, GordanParams(1, 1, 1, 2, 2, 2)).is_zero());

    const BinaryForm e3 = parse_form("x0^3 - 2*x0*x1^2 + x1^3");
    const BinaryForm f3 = parse_form("x0^2*x1 + 4*x1^3");
    CHECK(gordan_residual(e3, f3, g, GordanParams(0, 1, 2, 3, 3, 2)).is_zero());
    CHECK_THROWS_AS(gordan_residual(e, f, g, GordanParams(1, 1, 1, 3, 3, 3)), DomainError);
}

TEST_CASE("clebsch-gordan expansion of x0 times x1") {
    const auto terms = clebsch_gordan_expand(parse_form("x0"), parse_form("x1"));
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].r == 0);
    CHECK(terms[0].scalar == rat(1));
    CHECK(terms[1].r == 1);
    CHECK(terms[1].scalar == rat(1, 2));
    CHECK(clebsch_gordan_sum(terms) == BiForm::outer(parse_form("x0"), parse_form("x1")));
}

TEST_CASE("clebsch-gordan expansion reconstructs the outer product") {
    const BinaryForm e = parse_form("x0^2 + 3*x1^2");
    const BinaryForm f = parse_form("x0^3 - x0*x1^2 + 2*x1^3");
    const auto terms = clebsch_gordan_expand(e, f);
    REQUIRE(terms.size() == 3);
    CHECK(clebsch_gordan_sum(terms) == BiForm::outer(e, f));
}
