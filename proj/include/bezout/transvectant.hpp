#pragma once

#include <vector>

#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"

namespace bezout {

// r-th transvectant
//   (E,F)_r = (e-r)!(f-r)!/(e!f!) * sum_i (-1)^i C(r,i)
//             d^r E/dx0^(r-i) dx1^i * d^r F/dx0^i dx1^(r-i)
// of order e+f-2r. Zero form whenever r exceeds min(e, f); every downstream
// constant table assumes exactly this scaling.
BinaryForm transvectant(const BinaryForm& E, const BinaryForm& F, int r);

// m-th polar: ((e-m)!/e!) (y0 d/dx0 + y1 d/dx1)^m E, of bi-order (e-m, m).
// Specializing y := x recovers E.
BiForm polar(const BinaryForm& E, int m);

// Half-order polar E^sigma of an even-order form; symmetric in x <-> y.
BiForm sym_polarize(const BinaryForm& E);

// Legal index triple for the Gordan series on orders (e, f, g):
// a2+a3 <= e, a1+a3 <= f, a1+a2 <= g, and (a1 = 0 or a2+a3 = e).
struct GordanParams {
    int a1, a2, a3;
    int e, f, g;

    GordanParams(int a1, int a2, int a3, int e, int f, int g);
};

// Left side minus right side of the Gordan series
//   sum_i  C(f-a1-a3,i) C(a2,i) / C(e+f-2a3-i+1,i) * ((E,F)_{a3+i}, G)_{a1+a2-i}
//   = (-1)^a1 sum_i  C(g-a1-a2,i) C(a3,i) / C(e+g-2a2-i+1,i) * ((E,G)_{a2+i}, F)_{a1+a3-i}
// (sums truncate where a binomial argument leaves 0 <= k <= n).
// Identically the zero form for legal parameters.
BinaryForm gordan_residual(const BinaryForm& E, const BinaryForm& F, const BinaryForm& G,
                           const GordanParams& p);

// One term of the Clebsch-Gordan expansion of E(ux) F(uy).
struct ClebschGordanTerm {
    int r;
    Rational scalar; // C(e,r) C(f,r) / C(e+f-r+1, r)
    BiForm polar_part; // polar((E,F)_r, f-r)
};

// E(ux) F(uy) = sum_r scalar_r * omega^r * polar_part_r, r = 0..min(e,f).
std::vector<ClebschGordanTerm> clebsch_gordan_expand(const BinaryForm& E, const BinaryForm& F);

// The omega-weighted sum of the terms; reconstructs outer(E, F).
BiForm clebsch_gordan_sum(const std::vector<ClebschGordanTerm>& terms);

} // namespace bezout
