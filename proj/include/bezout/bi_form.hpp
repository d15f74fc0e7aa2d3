#pragma once

#include <string>
#include <vector>

#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Dense bihomogeneous form of bi-order (m, n): coeff(i, j) multiplies
// x0^(m-i) x1^i * y0^(n-j) y1^j. Bi-orders are non-negative; the default
// constructed value is the zero object (bi-order (-1,-1)) used only as an
// absorbing element.
class BiForm {
public:
    BiForm() : xorder_(-1), yorder_(-1) {}

    BiForm(int xorder, int yorder);

    static BiForm zero(int xorder, int yorder) { return BiForm(xorder, yorder); }

    // omega = x0*y1 - x1*y0, the fundamental antisymmetric biform.
    static BiForm omega();

    // E(x)*F(y) as a biform of bi-order (order E, order F).
    static BiForm outer(const BinaryForm& E, const BinaryForm& F);

    int xorder() const { return xorder_; }
    int yorder() const { return yorder_; }
    bool is_zero_object() const { return xorder_ < 0; }
    bool is_zero() const;

    const Rational& coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& c);

    bool symmetric() const; // requires xorder == yorder and coeff(i,j) == coeff(j,i)

    bool operator==(const BiForm& o) const;
    bool operator!=(const BiForm& o) const { return !(*this == o); }

    BiForm operator+(const BiForm& o) const;
    BiForm operator-(const BiForm& o) const;
    BiForm operator-() const;
    BiForm operator*(const BiForm& o) const;
    BiForm operator*(const Rational& s) const;

    BiForm pow(int k) const;

    std::string str() const;

private:
    int xorder_, yorder_;
    std::vector<Rational> grid_; // row-major (xorder+1) x (yorder+1)
};

inline BiForm operator*(const Rational& s, const BiForm& f) { return f * s; }

// Substitutes y0 := x0, y1 := x1; the result has order xorder + yorder.
BinaryForm specialize_y_to_x(const BiForm& F);

// Exact quotient P/Q over the bihomogeneous ring; throws DivisionError with
// the remainder in the message when the division is not exact.
BiForm exact_divide(const BiForm& P, const BiForm& Q);

std::ostream& operator<<(std::ostream& os, const BiForm& f);

} // namespace bezout
