#pragma once

#include <vector>

#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"

namespace bezout {

// Two independent forms of equal order d spanning a pencil; independence is
// equivalent to (A,B)_1 != 0 for nonzero equal-order forms.
struct Pencil {
    BinaryForm A, B;

    Pencil(BinaryForm A, BinaryForm B);

    int d() const { return A.order(); }
};

// Odd-transvectant sequence U_{2r+1}, r = 0..floor((d-1)/2), with
// order(U_{2r+1}) = 2(d-2r-1).
struct TransvectantSeries {
    int d;
    std::vector<BinaryForm> terms;

    TransvectantSeries(int d, std::vector<BinaryForm> terms);

    static int term_count(int d) { return (d - 1) / 2 + 1; }
    static int term_order(int d, int r) { return 2 * (d - 2 * r - 1); }
};

// (A(ux) B(uy) - B(ux) A(uy)) / omega, symmetric of bi-order (d-1, d-1).
// The raw overload accepts dependent pairs (giving the zero biform).
BiForm bezoutiant(const BinaryForm& A, const BinaryForm& B);
BiForm bezoutiant(const Pencil& p);

// c_r = 2 C(d, 2r+1)^2 / C(2d-2r, 2r+1), for 0 <= r <= floor((d-1)/2).
Rational c_constant(int d, int r);

// T_{2r+1} = (A,B)_{2r+1}. The raw overload accepts dependent pairs
// (all terms zero).
TransvectantSeries odd_series(const BinaryForm& A, const BinaryForm& B);
TransvectantSeries odd_series(const Pencil& p);

// The unique series with U = sum_r c_r omega^(2r) sym_polarize(U_{2r+1}),
// computed by iterated diagonal restriction and exact omega^2 division.
TransvectantSeries taylor_decompose(const BiForm& U, int d);

// sum_r c_r omega^(2r) sym_polarize(U_{2r+1}); inverse of taylor_decompose.
BiForm taylor_reconstruct(const TransvectantSeries& s);

} // namespace bezout
