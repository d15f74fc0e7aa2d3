#include "bezout/binary_form.hpp"

#include <ostream>
#include <sstream>

namespace bezout {

BinaryForm::BinaryForm(int order) : order_(order < 0 ? -1 : order) {
    if (order_ >= 0)
        coeffs_.assign(static_cast<size_t>(order_) + 1, Rational(0));
}

BinaryForm::BinaryForm(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 0)
        throw DomainError("explicit coefficients require a non-negative order");
    if (coeffs_.size() != static_cast<size_t>(order_) + 1)
        throw DomainError("coefficient count does not match order " + std::to_string(order_));
}

BinaryForm BinaryForm::monomial(int order, int x1_power, const Rational& c) {
    if (order < 0 || x1_power < 0 || x1_power > order)
        throw DomainError("monomial exponent out of range");
    BinaryForm f(order);
    f.coeffs_[static_cast<size_t>(x1_power)] = c;
    return f;
}

BinaryForm BinaryForm::constant(const Rational& c) {
    BinaryForm f(0);
    f.coeffs_[0] = c;
    return f;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

const Rational& BinaryForm::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i > order_)
        return zero;
    return coeffs_[static_cast<size_t>(i)];
}

int BinaryForm::first_nonzero() const {
    for (int i = 0; i <= order_; ++i)
        if (coeffs_[static_cast<size_t>(i)] != 0)
            return i;
    return -1;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (is_zero_object() || o.is_zero_object())
        return is_zero() && o.is_zero();
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (is_zero_object())
        return o;
    if (o.is_zero_object())
        return *this;
    if (order_ != o.order_)
        throw DomainError("order mismatch in addition: " + std::to_string(order_) + " vs " +
                          std::to_string(o.order_));
    BinaryForm r(order_);
    for (int i = 0; i <= order_; ++i)
        r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    return *this + (-o);
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (is_zero_object() || o.is_zero_object())
        return BinaryForm();
    BinaryForm r(order_ + o.order_);
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; j <= o.order_; ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

BinaryForm BinaryForm::operator*(const Rational& s) const {
    BinaryForm r = *this;
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

BinaryForm BinaryForm::pow(int k) const {
    if (k < 0)
        throw DomainError("negative power");
    BinaryForm r = BinaryForm::constant(Rational(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

BinaryForm BinaryForm::derivative(int di, int dj) const {
    if (di < 0 || dj < 0)
        throw DomainError("negative derivative order");
    const int e = order_;
    if (e - di - dj < 0)
        return BinaryForm(e < 0 ? -1 : e - di - dj);
    BinaryForm r(e - di - dj);
    // coeffs_[a] * x0^(e-a) x1^a  ->  falling(e-a,di) * falling(a,dj) * x0^(e-a-di) x1^(a-dj)
    for (int a = dj; a <= e; ++a) {
        if (coeffs_[a] == 0)
            continue;
        Integer scale = falling(e - a, di) * falling(a, dj);
        if (scale == 0)
            continue;
        r.coeffs_[a - dj] += coeffs_[a] * Rational(scale);
    }
    return r;
}

bool equal_or_both_zero(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero())
        return true;
    return a == b;
}

BinaryForm exact_divide(const BinaryForm& P, const BinaryForm& Q) {
    if (Q.is_zero())
        throw DomainError("division by the zero form");
    if (P.is_zero()) {
        int o = P.is_zero_object() ? -1 : P.order() - Q.order();
        return BinaryForm(o);
    }
    const int oq = P.order() - Q.order();
    if (oq < 0)
        throw DivisionError("quotient order would be negative; remainder " + P.str());

    const int lq = Q.first_nonzero();
    std::vector<Rational> rem = P.coeffs();
    BinaryForm quot(oq);
    std::vector<Rational> qc(static_cast<size_t>(oq) + 1, Rational(0));
    // Cancel the lowest surviving x1-power each step; exact division never
    // needs a monomial outside the quotient's range.
    for (int i = lq; i <= P.order(); ++i) {
        if (rem[i] == 0)
            continue;
        const int t = i - lq;
        if (t > oq) {
            BinaryForm r(P.order(), rem);
            throw DivisionError("non-exact division, remainder " + r.str());
        }
        Rational c = rem[i] / Q.coeff(lq);
        qc[t] = c;
        for (int j = lq; j <= Q.order(); ++j)
            rem[t + j] -= c * Q.coeff(j);
    }
    for (int i = 0; i < lq; ++i) {
        if (rem[i] != 0) {
            BinaryForm r(P.order(), rem);
            throw DivisionError("non-exact division, remainder " + r.str());
        }
    }
    return BinaryForm(oq, std::move(qc));
}

std::string BinaryForm::str() const {
    if (order_ < 0 || is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (first) {
            if (neg)
                os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rational a = neg ? Rational(-c) : c;
        const int p0 = order_ - i, p1 = i;
        std::string mono;
        if (p0 > 0)
            mono += "x0" + (p0 > 1 ? "^" + std::to_string(p0) : "");
        if (p1 > 0) {
            if (!mono.empty())
                mono += "*";
            mono += "x1" + (p1 > 1 ? "^" + std::to_string(p1) : "");
        }
        if (mono.empty())
            os << rational_str(a);
        else if (a == 1)
            os << mono;
        else
            os << rational_str(a) << "*" << mono;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
    return os << f.str();
}

} // namespace bezout
