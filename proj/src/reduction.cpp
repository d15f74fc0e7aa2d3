#include "bezout/reduction.hpp"

#include "bezout/errors.hpp"
#include "bezout/transvectant.hpp"

namespace bezout {

namespace {

InvariantKind resolve_kind(int d, InvariantKind kind) {
    if (kind == InvariantKind::Auto)
        return d % 2 == 0 ? InvariantKind::Degree2 : InvariantKind::Degree4;
    if (kind == InvariantKind::Degree2 && d % 2 != 0)
        throw DomainError("degree-2 invariant vanishes identically in odd order");
    if (kind == InvariantKind::Degree4 && d % 2 == 0)
        throw DomainError("degree-4 invariant vanishes identically in even order");
    return kind;
}

Rational scalar_of(const BinaryForm& f) { return f.is_zero() ? Rational(0) : f.coeff(0); }

} // namespace

Rational invariant_J(const BinaryForm& A, InvariantKind kind) {
    if (A.is_zero_object()) throw DomainError("invariant_J expects a form of definite order");
    const int d = A.order();
    switch (resolve_kind(d, kind)) {
        case InvariantKind::Degree2:
            return scalar_of(transvectant(A, A, d));
        default: {
            const BinaryForm H = transvectant(A, A, d - 1);
            return scalar_of(transvectant(H, H, 2));
        }
    }
}

BinaryForm evectant(const BinaryForm& A, InvariantKind kind) {
    if (A.is_zero_object()) throw DomainError("evectant expects a form of definite order");
    const int d = A.order();
    const InvariantKind k = resolve_kind(d, kind);
    const int n = k == InvariantKind::Degree2 ? 2 : 4;
    const BinaryForm H =
        k == InvariantKind::Degree4 ? transvectant(A, A, d - 1) : BinaryForm();

    std::vector<Rational> coeffs(d + 1, Rational(0));
    for (int q = 0; q <= d; ++q) {
        const BinaryForm Eq = BinaryForm::monomial(d, q, Rational(binomial(d, q)));
        Rational dJ;
        if (k == InvariantKind::Degree2) {
            dJ = rat(2) * scalar_of(transvectant(A, Eq, d));
        } else {
            dJ = rat(4) * scalar_of(transvectant(H, transvectant(A, Eq, d - 1), 2));
        }
        Rational c = dJ / n;
        if ((d + q) % 2 != 0) c = -c;
        coeffs[d - q] = c;
    }
    return BinaryForm(d, std::move(coeffs));
}

BinaryForm sigma_apply(const Pencil& p, const BinaryForm& F) {
    const int d = p.d();
    BinaryForm arg = F.is_zero_object() ? BinaryForm(d) : F;
    if (arg.order() != d) throw DomainError("sigma_apply expects a form of order d");
    const TransvectantSeries series = odd_series(p);
    BinaryForm out(d);
    for (int r = 0; 2 * r + 1 <= d; ++r)
        out = out + c_constant(d, r) * transvectant(arg, series.terms[r], d - 2 * r - 1);
    return out;
}

BinaryForm reduce(const Pencil& p, InvariantKind kind) {
    const Rational J = invariant_J(p.A, kind);
    if (J == 0) throw DomainError("reduce: J(A) = 0, reduction undefined");
    const BinaryForm ev = evectant(p.A, kind);
    return (rat(-1) / J) * sigma_apply(p, ev);
}

BinaryForm reduce_d2_special(const Pencil& p) {
    if (p.d() != 2) throw DomainError("reduce_d2_special expects order 2");
    const Rational J = scalar_of(transvectant(p.A, p.A, 2));
    if (J == 0) throw DomainError("reduce_d2_special: (A,A)_2 = 0");
    const BinaryForm T1 = transvectant(p.A, p.B, 1);
    return (rat(-2) / J) * transvectant(p.A, T1, 1);
}

} // namespace bezout
