#include "bezout/bezoutiant.hpp"

#include "bezout/transvectant.hpp"

namespace bezout {

Pencil::Pencil(BinaryForm A_, BinaryForm B_) : A(std::move(A_)), B(std::move(B_)) {
    if (A.order() < 1 || A.order() != B.order())
        throw DomainError("pencil needs two forms of equal order >= 1");
    if (A.is_zero() || B.is_zero())
        throw DomainError("pencil forms must be nonzero");
    if (transvectant(A, B, 1).is_zero())
        throw DomainError("pencil forms are linearly dependent ((A,B)_1 = 0)");
}

TransvectantSeries::TransvectantSeries(int d_, std::vector<BinaryForm> terms_)
    : d(d_), terms(std::move(terms_)) {
    if (d < 1)
        throw DomainError("series needs d >= 1");
    if (static_cast<int>(terms.size()) != term_count(d))
        throw DomainError("series needs " + std::to_string(term_count(d)) + " terms for d = " +
                          std::to_string(d));
    for (int r = 0; r < static_cast<int>(terms.size()); ++r) {
        const auto& t = terms[static_cast<size_t>(r)];
        if (!t.is_zero_object() && t.order() != term_order(d, r))
            throw DomainError("series term " + std::to_string(r) + " has order " +
                              std::to_string(t.order()) + ", expected " +
                              std::to_string(term_order(d, r)));
    }
}

BiForm bezoutiant(const BinaryForm& A, const BinaryForm& B) {
    if (A.order() < 1 || A.order() != B.order())
        throw DomainError("bezoutiant needs two forms of equal order >= 1");
    BiForm numerator = BiForm::outer(A, B) - BiForm::outer(B, A);
    return exact_divide(numerator, BiForm::omega());
}

BiForm bezoutiant(const Pencil& p) {
    return bezoutiant(p.A, p.B);
}

Rational c_constant(int d, int r) {
    if (d < 1 || r < 0 || 2 * r + 1 > d)
        throw DomainError("c constant index out of range");
    Integer b = binomial(d, 2 * r + 1);
    return make_rational(2 * b * b, binomial(2 * d - 2 * r, 2 * r + 1));
}

TransvectantSeries odd_series(const BinaryForm& A, const BinaryForm& B) {
    if (A.order() < 1 || A.order() != B.order())
        throw DomainError("series needs two forms of equal order >= 1");
    const int d = A.order();
    std::vector<BinaryForm> terms;
    for (int r = 0; r < TransvectantSeries::term_count(d); ++r)
        terms.push_back(transvectant(A, B, 2 * r + 1));
    return TransvectantSeries(d, std::move(terms));
}

TransvectantSeries odd_series(const Pencil& p) {
    return odd_series(p.A, p.B);
}

TransvectantSeries taylor_decompose(const BiForm& U, int d) {
    if (d < 1)
        throw DomainError("decomposition needs d >= 1");
    if (U.xorder() != d - 1 || U.yorder() != d - 1)
        throw DomainError("expected bi-order (" + std::to_string(d - 1) + ", " +
                          std::to_string(d - 1) + ")");
    if (!U.symmetric())
        throw DomainError("decomposition input must be symmetric");

    const BiForm omega2 = BiForm::omega().pow(2);
    const int count = TransvectantSeries::term_count(d);
    std::vector<BinaryForm> terms;
    BiForm rest = U; // stage r holds sum_{s>=r} c_s omega^(2(s-r)) (U_{2s+1})^sigma
    for (int r = 0; r < count; ++r) {
        BinaryForm diag = specialize_y_to_x(rest); // = c_r U_{2r+1}
        BinaryForm term = diag * (Rational(1) / c_constant(d, r));
        terms.push_back(term);
        BiForm peeled = rest - sym_polarize(term) * c_constant(d, r);
        if (r + 1 < count) {
            rest = exact_divide(peeled, omega2);
        } else if (!peeled.is_zero()) {
            throw DomainError("decomposition left a nonzero tail: " + peeled.str());
        }
    }
    return TransvectantSeries(d, std::move(terms));
}

BiForm taylor_reconstruct(const TransvectantSeries& s) {
    const BiForm omega = BiForm::omega();
    BiForm acc(s.d - 1, s.d - 1);
    for (int r = 0; r < static_cast<int>(s.terms.size()); ++r) {
        BinaryForm term = s.terms[static_cast<size_t>(r)];
        if (term.is_zero_object())
            term = BinaryForm(TransvectantSeries::term_order(s.d, r));
        acc = acc + omega.pow(2 * r) * sym_polarize(term) * c_constant(s.d, r);
    }
    return acc;
}

} // namespace bezout
