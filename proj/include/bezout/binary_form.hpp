#pragma once

#include <string>
#include <vector>

#include "bezout/rational.hpp"

namespace bezout {

// Dense binary form of order e: coeffs[i] multiplies x0^(e-i) * x1^i
// (plain monomial basis, no binomial weighting).
//
// The zero form of order e is representable and distinct per order. A form of
// negative order is the zero object: it has no coefficients, is identically
// zero, and absorbs/annihilates in arithmetic so that order bookkeeping such
// as (E,F)_r with e+f-2r < 0 stays total.
class BinaryForm {
public:
    // Zero object (order -1).
    BinaryForm() : order_(-1) {}

    // Zero form of the given order (negative order = zero object).
    explicit BinaryForm(int order);

    BinaryForm(int order, std::vector<Rational> coeffs);

    static BinaryForm zero(int order) { return BinaryForm(order); }

    // c * x0^(order - x1_power) * x1^(x1_power)
    static BinaryForm monomial(int order, int x1_power, const Rational& c = Rational(1));

    static BinaryForm constant(const Rational& c);

    int order() const { return order_; }
    bool is_zero() const;
    bool is_zero_object() const { return order_ < 0; }

    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Index of the first nonzero coefficient, -1 if zero.
    int first_nonzero() const;

    // Zero objects compare equal to each other; otherwise order and all
    // coefficients must match (a zero form remembers its order).
    bool operator==(const BinaryForm& o) const;
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    // Addition tolerates a zero-object operand; proper forms must have equal
    // orders.
    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const Rational& s) const;

    BinaryForm pow(int k) const;

    // d^(i+j) / dx0^i dx1^j; order drops to e-i-j (zero object if negative).
    BinaryForm derivative(int i, int j) const;

    // Expression-grammar text, e.g. "x0^2 - 2*x0*x1"; reparses to the same form.
    std::string str() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

inline BinaryForm operator*(const Rational& s, const BinaryForm& f) { return f * s; }

// Equality that ignores order metadata when both sides vanish.
bool equal_or_both_zero(const BinaryForm& a, const BinaryForm& b);

// Exact quotient P/Q; throws DivisionError (message includes the remainder)
// when Q does not divide P, DomainError when Q = 0.
BinaryForm exact_divide(const BinaryForm& P, const BinaryForm& Q);

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

} // namespace bezout
