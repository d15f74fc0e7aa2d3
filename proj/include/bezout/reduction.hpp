#pragma once

#include "bezout/bezoutiant.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Which basic invariant J drives the evectant and the reduction.
// Degree2 is (A,A)_d (even order only), Degree4 is ((A,A)_{d-1},(A,A)_{d-1})_2
// (odd order only); Auto picks by parity of the order.
enum class InvariantKind { Auto, Degree2, Degree4 };

Rational invariant_J(const BinaryForm& A, InvariantKind kind = InvariantKind::Auto);

// Order-d covariant Ev with (Ev, A)_d = J(A). Writing
// A = sum_p binom(d,p) a_p x0^(d-p) x1^p and n = deg J,
//   Ev = ((-1)^d / n) sum_q (-1)^q (dJ/da_q) x0^q x1^(d-q).
BinaryForm evectant(const BinaryForm& A, InvariantKind kind = InvariantKind::Auto);

// sigma(F) = sum_r c_r (F, T_{2r+1})_{d-2r-1} = (F,B)_d A - (F,A)_d B,
// an endomorphism of the order-d forms attached to the pencil.
BinaryForm sigma_apply(const Pencil& p, const BinaryForm& F);

// Reduced second generator -(1/J) sigma(Ev_J) = B - ((Ev_J,B)_d / J) A;
// requires J(A) != 0.
BinaryForm reduce(const Pencil& p, InvariantKind kind = InvariantKind::Auto);

// Order-2 shortcut -(2/(A,A)_2) (A, (A,B)_1)_1, the d = 2 case of reduce.
BinaryForm reduce_d2_special(const Pencil& p);

} // namespace bezout
