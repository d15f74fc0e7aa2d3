#include "bezout/wronskian_ode.hpp"

#include <utility>

#include "bezout/errors.hpp"
#include "bezout/linear_map.hpp"
#include "bezout/transvectant.hpp"

namespace bezout {

OdeParams::OdeParams(int d_, BinaryForm M_, BinaryForm N_)
    : d(d_), M(std::move(M_)), N(std::move(N_)) {
    if (d < 2) throw DomainError("OdeParams requires d >= 2");
    if (M.is_zero() || M.order() != 2 * d - 2)
        throw DomainError("OdeParams: M must be a nonzero form of order 2d-2");
    const int n_order = 2 * d - 6;
    if (n_order < 0) {
        if (!N.is_zero()) throw DomainError("OdeParams: N must vanish when 2d-6 < 0");
        N = BinaryForm();
    } else if (N.is_zero_object()) {
        N = BinaryForm(n_order);
    } else if (N.order() != n_order) {
        throw DomainError("OdeParams: N must have order 2d-6");
    }
}

BinaryForm wronskian(const std::vector<BinaryForm>& forms) {
    const int q = static_cast<int>(forms.size());
    if (q == 0) throw DomainError("wronskian requires at least one form");
    const int p = forms[0].order();
    for (const auto& f : forms)
        if (f.is_zero_object() || f.order() != p)
            throw DomainError("wronskian requires forms of one common order");
    if (q > p + 1)
        throw DomainError("wronskian family exceeds the dimension of its form space");

    std::vector<std::vector<BinaryForm>> m(q, std::vector<BinaryForm>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            m[i][j] = forms[i].derivative(q - 1 - j, j);

    // Fraction-free elimination: after stage k every active entry is a
    // (k+2)x(k+2) minor of the row-permuted matrix, so each division is exact.
    const int out_order = q * (p - q + 1);
    BinaryForm prev = BinaryForm::constant(rat(1));
    int sign = 1;
    for (int k = 0; k + 1 < q; ++k) {
        if (m[k][k].is_zero()) {
            int pivot_row = -1;
            for (int i = k + 1; i < q; ++i)
                if (!m[i][k].is_zero()) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) return BinaryForm(out_order);
            std::swap(m[k], m[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < q; ++i) {
            for (int j = k + 1; j < q; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = BinaryForm();
        }
        prev = m[k][k];
    }
    BinaryForm det = m[q - 1][q - 1];
    if (det.is_zero()) return BinaryForm(out_order);
    return sign < 0 ? -det : det;
}

namespace {

// (M,F)_2 - ((d-2)/(4d-6)) N F with a zero-object N acting as zero.
BinaryForm psi_raw(int d, const BinaryForm& M, const BinaryForm& N, const BinaryForm& F) {
    BinaryForm out = transvectant(M, F, 2);
    const BinaryForm nf = N * F;
    if (!nf.is_zero_object()) out = out - rat(d - 2, 4 * d - 6) * nf;
    return out;
}

} // namespace

BinaryForm psi_apply(const OdeParams& p, const BinaryForm& F) {
    BinaryForm arg = F.is_zero_object() ? BinaryForm(p.d) : F;
    if (arg.order() != p.d)
        throw DomainError("psi_apply expects a form of order d");
    return psi_raw(p.d, p.M, p.N, arg);
}

BinaryForm wronskian_identity_residual(const BinaryForm& A, const BinaryForm& B,
                                       const BinaryForm& F) {
    const int d = A.order();
    if (d < 2 || B.order() != d || F.order() != d)
        throw DomainError("identity residual needs three forms of one order >= 2");
    const BinaryForm W = wronskian({A, B, F});
    const Rational dd(Integer(d) * d - d);
    const BinaryForm T1 = transvectant(A, B, 1);
    const BinaryForm T3 = transvectant(A, B, 3);
    return (rat(1) / (dd * dd * dd)) * W - psi_raw(d, T1, T3, F);
}

bool pencil_membership(const Pencil& p, const BinaryForm& F) {
    const int d = p.d();
    if (!F.is_zero_object() && F.order() != d)
        throw DomainError("pencil_membership expects a form of order d");
    if (F.is_zero()) return true;
    const BinaryForm T1 = transvectant(p.A, p.B, 1);
    const BinaryForm T3 = transvectant(p.A, p.B, 3);
    return psi_raw(d, T1, T3, F).is_zero();
}

std::vector<BinaryForm> psi_kernel(const OdeParams& p) {
    LinearMapQ map = LinearMapQ::from_operator(
        p.d, 3 * p.d - 6, [&p](const BinaryForm& b) { return psi_apply(p, b); });
    std::vector<BinaryForm> out;
    for (const auto& v : map.kernel_basis()) out.emplace_back(p.d, v);
    return out;
}

RecoveredPencil recover_pencil(const OdeParams& p) {
    const std::vector<BinaryForm> kernel = psi_kernel(p);
    if (kernel.size() != 2)
        throw DomainError("recover_pencil: kernel dimension is not 2");
    Pencil pencil(kernel[0], kernel[1]);
    const BinaryForm T1 = transvectant(pencil.A, pencil.B, 1);
    const BinaryForm T3 = transvectant(pencil.A, pencil.B, 3);
    const int lead = T1.first_nonzero();
    const Rational lambda = p.M.coeff(lead) / T1.coeff(lead);
    if (!(lambda * T1 == p.M) || !equal_or_both_zero(lambda * T3, p.N))
        throw DomainError("recover_pencil: parameters are not proportional to the pencil invariants");
    return RecoveredPencil{std::move(pencil), lambda};
}

namespace {

std::vector<BinaryForm> phi_all(const OdeParams& p) {
    const int d = p.d;
    if (d < 3) throw DomainError("phi covariants require d >= 3");
    std::vector<BinaryForm> image(d + 1);
    for (int s = 0; s <= d; ++s)
        image[s] = psi_apply(p, BinaryForm::monomial(d, d - s));
    std::vector<BinaryForm> w(d + 1);
    for (int i = 0; i <= d; ++i) {
        std::vector<BinaryForm> family;
        family.reserve(d);
        for (int s = 0; s <= d; ++s)
            if (s != i) family.push_back(image[s]);
        const Rational scale =
            make_rational(i % 2 == 0 ? 1 : -1, factorial(i) * factorial(d - i));
        w[i] = scale * wronskian(family);
    }
    std::vector<BinaryForm> phi;
    phi.reserve(d + 1);
    for (int r = 0; r <= d; ++r) {
        BinaryForm sum(d * (2 * d - 4) - 2 * r);
        for (int i = 0; i <= d; ++i)
            sum = sum + transvectant(w[i], BinaryForm::monomial(d, d - i), r);
        phi.push_back(sum);
    }
    return phi;
}

} // namespace

BinaryForm phi_covariant(const OdeParams& p, int r) {
    if (r < 0 || r > p.d) throw DomainError("phi_covariant index must lie in 0..d");
    return phi_all(p)[r];
}

bool realizable(const OdeParams& p) {
    for (const BinaryForm& f : phi_all(p))
        if (!f.is_zero()) return false;
    return true;
}

} // namespace bezout
