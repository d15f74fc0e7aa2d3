#include <doctest.h>

#include "bezout/bezoutiant.hpp"
#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/reduction.hpp"
#include "bezout/transvectant.hpp"

using namespace bezout;

TEST_CASE("basic invariants") {
    CHECK(invariant_J(parse_form("x0^2 + x1^2")) == rat(2));
    CHECK(invariant_J(parse_form("x0^2")) == rat(0));
    CHECK(invariant_J(parse_form("x0^3 + x1^3")) == rat(-2));
    CHECK(invariant_J(parse_form("x0^4")) == rat(0));
    CHECK(invariant_J(parse_form("x0^2 + x1^2"), InvariantKind::Degree2) == rat(2));
    CHECK_THROWS_AS(invariant_J(parse_form("x0^3"), InvariantKind::Degree2), DomainError);
    CHECK_THROWS_AS(invariant_J(parse_form("x0^2"), InvariantKind::Degree4), DomainError);
}

TEST_CASE("evectant fixed points") {
    const BinaryForm a = parse_form("x0^2 - 3*x0*x1 + 2*x1^2");
    CHECK(evectant(a) == a);
    CHECK(evectant(parse_form("x0^4")) == parse_form("x0^4"));
    CHECK_THROWS_AS(evectant(parse_form("x0^3"), InvariantKind::Degree2), DomainError);
}

TEST_CASE("evectant pairs with the form to give the invariant") {
    const std::vector<BinaryForm> cases = {
        parse_form("x0^2 + x1^2"),
        parse_form("x0^3 + x1^3"),
        parse_form("x0^4 - 2*x0^3*x1 + x0*x1^3"),
        parse_form("x0^5 + x0^2*x1^3 - 4*x1^5"),
        parse_form("x0^6 + x0*x1^5 + x1^6"),
    };
    for (const BinaryForm& a : cases) {
        const BinaryForm ev = evectant(a);
        CHECK(ev.order() == a.order());
        CHECK(transvectant(ev, a, a.order()) == BinaryForm::constant(invariant_J(a)));
    }
}

TEST_CASE("sigma agrees with its closed form") {
    const Pencil p(parse_form("x0^3 + x1^3"), parse_form("x0^2*x1"));
    const std::vector<BinaryForm> args = {parse_form("x0^3"), parse_form("x0*x1^2 - x1^3"),
                                          parse_form("x0^3 - 2*x0^2*x1 + x1^3")};
    for (const BinaryForm& f : args) {
        const Rational fb = transvectant(f, p.B, 3).coeff(0);
        const Rational fa = transvectant(f, p.A, 3).coeff(0);
        CHECK(sigma_apply(p, f) == fb * p.A - fa * p.B);
    }
}

TEST_CASE("sigma fixes the first generator of the order-2 monomial pencil") {
    const Pencil p(parse_form("x0^2"), parse_form("x1^2"));
    CHECK(sigma_apply(p, parse_form("x0^2")) == parse_form("x0^2"));
}

TEST_CASE("reduction of an order-2 pencil") {
    const Pencil p(parse_form("x0^2 + x1^2"), parse_form("x1^2"));
    const BinaryForm beta = reduce(p);
    CHECK(beta == rat(1, 2) * parse_form("x1^2 - x0^2"));
    CHECK(reduce_d2_special(p) == beta);
    // beta - B is the expected multiple of A
    const Rational mult = -transvectant(evectant(p.A), p.B, 2).coeff(0) / invariant_J(p.A);
    CHECK(beta - p.B == mult * p.A);
}

TEST_CASE("reduction requires a nonvanishing invariant") {
    CHECK_THROWS_AS(reduce(Pencil(parse_form("x0^2"), parse_form("x1^2"))), DomainError);
    CHECK_THROWS_AS(reduce_d2_special(Pencil(parse_form("x0^2"), parse_form("x1^2"))),
                    DomainError);
}

TEST_CASE("reduction of an order-3 pencil") {
    const Pencil p(parse_form("x0^3 + x1^3"), parse_form("x0^2*x1"));
    const Rational j = invariant_J(p.A);
    REQUIRE(j != 0);
    const BinaryForm beta = reduce(p);
    const Rational mult = -transvectant(evectant(p.A), p.B, 3).coeff(0) / j;
    CHECK(beta - p.B == mult * p.A);
    // the reduced generator spans the same pencil
    CHECK_FALSE(transvectant(p.A, beta, 1).is_zero());
}
