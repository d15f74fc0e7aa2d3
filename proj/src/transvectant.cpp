#include "bezout/transvectant.hpp"

namespace bezout {

BinaryForm transvectant(const BinaryForm& E, const BinaryForm& F, int r) {
    if (r < 0)
        throw DomainError("transvectant index must be non-negative");
    const int e = E.order(), f = F.order();
    if (E.is_zero_object() || F.is_zero_object())
        return BinaryForm();
    const int out = e + f - 2 * r;
    if (r > e || r > f)
        return BinaryForm(out); // zero for r > min(e,f); zero object if out < 0
    BinaryForm sum(out);
    for (int i = 0; i <= r; ++i) {
        BinaryForm t = E.derivative(r - i, i) * F.derivative(i, r - i);
        if (i % 2)
            t = -t;
        sum = sum + t * Rational(binomial(r, i));
    }
    Rational scale = make_rational(factorial(e - r) * factorial(f - r), factorial(e) * factorial(f));
    return sum * scale;
}

BiForm polar(const BinaryForm& E, int m) {
    const int e = E.order();
    if (m < 0 || e < 0 || m > e)
        throw DomainError("polar index out of range");
    BiForm r(e - m, m);
    Rational scale = make_rational(factorial(e - m), factorial(e));
    for (int k = 0; k <= m; ++k) {
        BinaryForm dk = E.derivative(m - k, k); // order e-m, paired with y0^(m-k) y1^k
        Rational w = scale * Rational(binomial(m, k));
        for (int a = 0; a <= e - m; ++a)
            r.set_coeff(a, k, dk.coeff(a) * w);
    }
    return r;
}

BiForm sym_polarize(const BinaryForm& E) {
    if (E.order() < 0)
        throw DomainError("symmetric polarization needs a proper form");
    if (E.order() % 2)
        throw DomainError("symmetric polarization needs an even order");
    return polar(E, E.order() / 2);
}

GordanParams::GordanParams(int a1_, int a2_, int a3_, int e_, int f_, int g_)
    : a1(a1_), a2(a2_), a3(a3_), e(e_), f(f_), g(g_) {
    if (a1 < 0 || a2 < 0 || a3 < 0)
        throw DomainError("Gordan indices must be non-negative");
    if (a2 + a3 > e || a1 + a3 > f || a1 + a2 > g)
        throw DomainError("Gordan indices exceed the argument orders");
    if (a1 != 0 && a2 + a3 != e)
        throw DomainError("Gordan legality needs a1 = 0 or a2 + a3 = e");
}

namespace {

// sum_i C(top1,i) C(top2,i) / C(den0 - i, i) * ((X,Y)_{r0+i}, Z)_{s0-i}
BinaryForm gordan_side(const BinaryForm& X, const BinaryForm& Y, const BinaryForm& Z, int top1,
                       int top2, int den0, int r0, int s0, int out_order) {
    BinaryForm acc(out_order);
    for (int i = 0;; ++i) {
        Integer b1 = binomial(top1, i), b2 = binomial(top2, i);
        if (b1 == 0 || b2 == 0)
            break;
        if (s0 - i < 0)
            break;
        Integer den = binomial(den0 - i, i);
        if (den == 0)
            throw DomainError("Gordan series denominator vanished");
        BinaryForm inner = transvectant(transvectant(X, Y, r0 + i), Z, s0 - i);
        acc = acc + inner * make_rational(b1 * b2, den);
    }
    return acc;
}

} // namespace

BinaryForm gordan_residual(const BinaryForm& E, const BinaryForm& F, const BinaryForm& G,
                           const GordanParams& p) {
    if (E.order() != p.e || F.order() != p.f || G.order() != p.g)
        throw DomainError("Gordan parameters built for different orders");
    const int out = p.e + p.f + p.g - 2 * (p.a1 + p.a2 + p.a3);
    BinaryForm lhs = gordan_side(E, F, G, p.f - p.a1 - p.a3, p.a2, p.e + p.f - 2 * p.a3 + 1, p.a3,
                                 p.a1 + p.a2, out);
    BinaryForm rhs = gordan_side(E, G, F, p.g - p.a1 - p.a2, p.a3, p.e + p.g - 2 * p.a2 + 1, p.a2,
                                 p.a1 + p.a3, out);
    if (p.a1 % 2)
        rhs = -rhs;
    return lhs - rhs;
}

std::vector<ClebschGordanTerm> clebsch_gordan_expand(const BinaryForm& E, const BinaryForm& F) {
    const int e = E.order(), f = F.order();
    if (e < 0 || f < 0)
        throw DomainError("Clebsch-Gordan expansion needs proper forms");
    std::vector<ClebschGordanTerm> terms;
    for (int r = 0; r <= std::min(e, f); ++r) {
        Rational scalar = make_rational(binomial(e, r) * binomial(f, r), binomial(e + f - r + 1, r));
        terms.push_back({r, scalar, polar(transvectant(E, F, r), f - r)});
    }
    return terms;
}

BiForm clebsch_gordan_sum(const std::vector<ClebschGordanTerm>& terms) {
    BiForm acc;
    const BiForm w = BiForm::omega();
    for (const auto& t : terms)
        acc = acc + w.pow(t.r) * t.polar_part * t.scalar;
    return acc;
}

} // namespace bezout
