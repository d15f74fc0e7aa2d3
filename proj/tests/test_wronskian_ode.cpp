#include <doctest.h>

#include "bezout/bezoutiant.hpp"
#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/linear_map.hpp"
#include "bezout/transvectant.hpp"
#include "bezout/wronskian_ode.hpp"

using namespace bezout;

TEST_CASE("wronskian determinants") {
    const BinaryForm a = parse_form("x0^2");
    const BinaryForm b = parse_form("x1^2");
    const BinaryForm c = parse_form("x0*x1");
    CHECK(wronskian({a, b, c}) == BinaryForm::constant(rat(-4)));
    CHECK(wronskian({a}) == a);
    CHECK(wronskian({a, b}) == -wronskian({b, a}));

    const BinaryForm dep = wronskian({a, b, a + b});
    CHECK(dep.is_zero());
    CHECK(dep.order() == 0);

    CHECK_THROWS_AS(wronskian({}), DomainError);
    CHECK_THROWS_AS(wronskian({a, parse_form("x0^3")}), DomainError);
    CHECK_THROWS_AS(wronskian({a, b, c, a + b}), DomainError);
}

TEST_CASE("wronskian vanishes exactly on dependent families") {
    const BinaryForm f = parse_form("x0^3 + x0*x1^2");
    const BinaryForm g = parse_form("x0^2*x1 - x1^3");
    CHECK_FALSE(wronskian({f, g}).is_zero());
    CHECK(wronskian({f, rat(-5) * f}).is_zero());
    CHECK(wronskian({f, g, rat(2) * f - rat(7) * g}).is_zero());
}

TEST_CASE("ode parameter validation") {
    CHECK_NOTHROW(OdeParams(2, parse_form("x0*x1"), BinaryForm()));
    CHECK_NOTHROW(OdeParams(3, parse_form("x0^2*x1^2"), BinaryForm::constant(rat(1))));
    CHECK_THROWS_AS(OdeParams(1, parse_form("0", 0), BinaryForm()), DomainError);
    CHECK_THROWS_AS(OdeParams(3, parse_form("x0^2"), BinaryForm()), DomainError);
    CHECK_THROWS_AS(OdeParams(2, BinaryForm(2), BinaryForm()), DomainError);
    CHECK_THROWS_AS(OdeParams(2, parse_form("x0*x1"), BinaryForm::constant(rat(1))), DomainError);
    CHECK_THROWS_AS(OdeParams(4, parse_form("x0^6"), parse_form("x0")), DomainError);
    // a zero object N is promoted to the zero form of order 2d-6
    CHECK(OdeParams(4, parse_form("x0^6"), BinaryForm()).N.order() == 2);
}

TEST_CASE("psi operator on the order-2 monomial pencil") {
    const OdeParams p(2, parse_form("x0*x1"), BinaryForm());
    CHECK(psi_apply(p, parse_form("x0*x1")) == BinaryForm::constant(rat(-1, 2)));
    CHECK(psi_apply(p, parse_form("x0^2")).is_zero());
    CHECK(psi_apply(p, parse_form("x1^2")).is_zero());
    CHECK_THROWS_AS(psi_apply(p, parse_form("x0^3")), DomainError);
}

TEST_CASE("wronskian identity") {
    CHECK(wronskian_identity_residual(parse_form("x0^2"), parse_form("x1^2"), parse_form("x0*x1"))
              .is_zero());
    CHECK(wronskian_identity_residual(parse_form("x0^3 + x1^3"), parse_form("x0^2*x1"),
                                      parse_form("x0*x1^2 - 2*x1^3"))
              .is_zero());
    CHECK(wronskian_identity_residual(parse_form("x0^4 - x1^4"), parse_form("x0^3*x1 + x0*x1^3"),
                                      parse_form("x0^2*x1^2"))
              .is_zero());
}

TEST_CASE("pencil membership") {
    const Pencil p(parse_form("x0^2"), parse_form("x1^2"));
    CHECK(pencil_membership(p, parse_form("2*x0^2 - 3*x1^2")));
    CHECK(pencil_membership(p, BinaryForm(2)));
    CHECK_FALSE(pencil_membership(p, parse_form("x0*x1")));

    const Pencil q(parse_form("x0^3"), parse_form("x1^3"));
    CHECK(pencil_membership(q, parse_form("x0^3 + 5*x1^3")));
    CHECK_FALSE(pencil_membership(q, parse_form("x0^2*x1")));
}

TEST_CASE("kernel of psi for a realizable parameter pair") {
    const BinaryForm t1 = transvectant(parse_form("x0^3"), parse_form("x1^3"), 1);
    const BinaryForm t3 = transvectant(parse_form("x0^3"), parse_form("x1^3"), 3);
    CHECK(t1 == parse_form("x0^2*x1^2"));
    CHECK(t3 == BinaryForm::constant(rat(1)));

    const OdeParams p(3, t1, t3);
    const auto kernel = psi_kernel(p);
    REQUIRE(kernel.size() == 2);
    std::vector<BinaryForm> joint = kernel;
    joint.push_back(parse_form("x0^3"));
    joint.push_back(parse_form("x1^3"));
    CHECK(span_rank(joint) == 2);
}

TEST_CASE("pencil recovery inverts the odd transvectants") {
    const Pencil p(parse_form("x0^3 - x1^3"), parse_form("x0^2*x1 + x0*x1^2"));
    const BinaryForm t1 = transvectant(p.A, p.B, 1);
    const BinaryForm t3 = transvectant(p.A, p.B, 3);
    const OdeParams scaled(3, rat(5) * t1, rat(5) * t3);
    const RecoveredPencil rec = recover_pencil(scaled);
    CHECK(rec.lambda == rat(5));
    CHECK(span_rank({rec.pencil.A, rec.pencil.B, p.A, p.B}) == 2);

    const OdeParams generic(3, parse_form("x0^4 + x1^4"), BinaryForm::constant(rat(1)));
    CHECK_THROWS_AS(recover_pencil(generic), DomainError);
}

TEST_CASE("realizability covariants vanish exactly on pencil data") {
    const Pencil p(parse_form("x0^3 + 2*x0*x1^2"), parse_form("x1^3 - x0^2*x1"));
    const OdeParams good(3, transvectant(p.A, p.B, 1), transvectant(p.A, p.B, 3));
    for (int r = 0; r <= 3; ++r) {
        const BinaryForm phi = phi_covariant(good, r);
        CHECK(phi.is_zero());
        CHECK(phi.order() == 3 * 2 - 2 * r);
    }
    CHECK(realizable(good));

    const OdeParams bad(3, parse_form("x0^4 + x1^4"), BinaryForm::constant(rat(1)));
    bool some_nonzero = false;
    for (int r = 0; r <= 3; ++r)
        some_nonzero = some_nonzero || !phi_covariant(bad, r).is_zero();
    CHECK(some_nonzero);
    CHECK_FALSE(realizable(bad));
}

TEST_CASE("realizability covariant domain") {
    const OdeParams p3(3, parse_form("x0^4 + x1^4"), BinaryForm::constant(rat(1)));
    CHECK_THROWS_AS(phi_covariant(p3, -1), DomainError);
    CHECK_THROWS_AS(phi_covariant(p3, 4), DomainError);
    const OdeParams p2(2, parse_form("x0*x1"), BinaryForm());
    CHECK_THROWS_AS(phi_covariant(p2, 0), DomainError);
    CHECK_THROWS_AS(realizable(p2), DomainError);
}
