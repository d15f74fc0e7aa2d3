#pragma once

#include <vector>

#include "bezout/bezoutiant.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Parameter pair of the Wronskian differential operator
//   psi_{M,N}(F) = (M,F)_2 - ((d-2)/(4d-6)) N F
// with order(M) = 2d-2, order(N) = 2d-6 and M != 0. For d = 2 the N-order is
// negative, N is the zero object, and psi reduces to F -> (M,F)_2; the Phi
// machinery additionally requires d >= 3.
struct OdeParams {
    int d;
    BinaryForm M, N;

    OdeParams(int d, BinaryForm M, BinaryForm N);
};

// q x q determinant with (i,j) entry d^(q-1) F_i / dx0^(q-j) dx1^(j-1),
// of order q(p-q+1); vanishes exactly on linearly dependent families.
BinaryForm wronskian(const std::vector<BinaryForm>& forms);

BinaryForm psi_apply(const OdeParams& p, const BinaryForm& F);

// W/(d^2-d)^3 - [(T1,F)_2 - ((d-2)/(4d-6)) T3 F], where W is the Wronskian of
// (A, B, F) and T_i = (A,B)_i; identically the zero form.
BinaryForm wronskian_identity_residual(const BinaryForm& A, const BinaryForm& B,
                                       const BinaryForm& F);

// F lies in span{A, B} iff psi_{T1,T3}(F) = 0.
bool pencil_membership(const Pencil& p, const BinaryForm& F);

// Canonical basis of ker(psi_{M,N}: S_d -> S_{3d-6}).
std::vector<BinaryForm> psi_kernel(const OdeParams& p);

struct RecoveredPencil {
    Pencil pencil;
    Rational lambda;
};

// When the kernel is exactly 2-dimensional with canonical (echelon) basis
// {A, B}, returns the pencil and the lambda with M = lambda (A,B)_1,
// N = lambda (A,B)_3; throws DomainError otherwise.
RecoveredPencil recover_pencil(const OdeParams& p);

// Phi_r = sum_{i=0}^d (w_i, x0^i x1^(d-i))_r with
// w_i = (-1)^i / (i!(d-i)!) * wronskian of {psi(x0^s x1^(d-s)) : s != i};
// order d(2d-4) - 2r, total degree d in the coefficients of (M, N).
// Requires d >= 3 and 0 <= r <= d.
BinaryForm phi_covariant(const OdeParams& p, int r);

// True iff Phi_r = 0 for every r in 0..d; equivalent to the kernel of
// psi_{M,N} having dimension >= 2, i.e. (M,N) arising from a pencil.
bool realizable(const OdeParams& p);

} // namespace bezout
