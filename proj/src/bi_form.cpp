#include "bezout/bi_form.hpp"

#include <ostream>
#include <sstream>

namespace bezout {

BiForm::BiForm(int xorder, int yorder) : xorder_(xorder), yorder_(yorder) {
    if (xorder_ < 0 || yorder_ < 0) {
        xorder_ = yorder_ = -1;
        return;
    }
    grid_.assign(static_cast<size_t>(xorder_ + 1) * (yorder_ + 1), Rational(0));
}

BiForm BiForm::omega() {
    BiForm w(1, 1);
    w.set_coeff(0, 1, Rational(1));
    w.set_coeff(1, 0, Rational(-1));
    return w;
}

BiForm BiForm::outer(const BinaryForm& E, const BinaryForm& F) {
    if (E.is_zero_object() || F.is_zero_object())
        return BiForm();
    BiForm r(E.order(), F.order());
    for (int i = 0; i <= E.order(); ++i) {
        if (E.coeff(i) == 0)
            continue;
        for (int j = 0; j <= F.order(); ++j)
            r.set_coeff(i, j, E.coeff(i) * F.coeff(j));
    }
    return r;
}

bool BiForm::is_zero() const {
    for (const auto& c : grid_)
        if (c != 0)
            return false;
    return true;
}

const Rational& BiForm::coeff(int i, int j) const {
    static const Rational zero(0);
    if (i < 0 || i > xorder_ || j < 0 || j > yorder_)
        return zero;
    return grid_[static_cast<size_t>(i) * (yorder_ + 1) + j];
}

void BiForm::set_coeff(int i, int j, const Rational& c) {
    if (i < 0 || i > xorder_ || j < 0 || j > yorder_)
        throw DomainError("biform coefficient index out of range");
    grid_[static_cast<size_t>(i) * (yorder_ + 1) + j] = c;
}

bool BiForm::symmetric() const {
    if (xorder_ != yorder_)
        return false;
    for (int i = 0; i <= xorder_; ++i)
        for (int j = 0; j < i; ++j)
            if (coeff(i, j) != coeff(j, i))
                return false;
    return true;
}

bool BiForm::operator==(const BiForm& o) const {
    if (is_zero_object() || o.is_zero_object())
        return is_zero() && o.is_zero();
    return xorder_ == o.xorder_ && yorder_ == o.yorder_ && grid_ == o.grid_;
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (is_zero_object())
        return o;
    if (o.is_zero_object())
        return *this;
    if (xorder_ != o.xorder_ || yorder_ != o.yorder_)
        throw DomainError("bi-order mismatch in addition");
    BiForm r = *this;
    for (size_t k = 0; k < grid_.size(); ++k)
        r.grid_[k] += o.grid_[k];
    return r;
}

BiForm BiForm::operator-() const {
    BiForm r = *this;
    for (auto& c : r.grid_)
        c = -c;
    return r;
}

BiForm BiForm::operator-(const BiForm& o) const {
    return *this + (-o);
}

BiForm BiForm::operator*(const BiForm& o) const {
    if (is_zero_object() || o.is_zero_object())
        return BiForm();
    BiForm r(xorder_ + o.xorder_, yorder_ + o.yorder_);
    for (int i = 0; i <= xorder_; ++i)
        for (int j = 0; j <= yorder_; ++j) {
            const Rational& c = coeff(i, j);
            if (c == 0)
                continue;
            for (int p = 0; p <= o.xorder_; ++p)
                for (int q = 0; q <= o.yorder_; ++q) {
                    const Rational& d = o.coeff(p, q);
                    if (d == 0)
                        continue;
                    r.grid_[static_cast<size_t>(i + p) * (r.yorder_ + 1) + (j + q)] += c * d;
                }
        }
    return r;
}

BiForm BiForm::operator*(const Rational& s) const {
    BiForm r = *this;
    for (auto& c : r.grid_)
        c *= s;
    return r;
}

BiForm BiForm::pow(int k) const {
    if (k < 0)
        throw DomainError("negative power");
    BiForm r(0, 0);
    r.set_coeff(0, 0, Rational(1));
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

BinaryForm specialize_y_to_x(const BiForm& F) {
    if (F.is_zero_object())
        return BinaryForm();
    std::vector<Rational> c(static_cast<size_t>(F.xorder() + F.yorder()) + 1, Rational(0));
    for (int i = 0; i <= F.xorder(); ++i)
        for (int j = 0; j <= F.yorder(); ++j)
            c[static_cast<size_t>(i + j)] += F.coeff(i, j);
    return BinaryForm(F.xorder() + F.yorder(), std::move(c));
}

namespace {

// Lexicographically least nonzero (i, j); {-1,-1} when zero.
std::pair<int, int> leading(const BiForm& F) {
    for (int i = 0; i <= F.xorder(); ++i)
        for (int j = 0; j <= F.yorder(); ++j)
            if (F.coeff(i, j) != 0)
                return {i, j};
    return {-1, -1};
}

} // namespace

BiForm exact_divide(const BiForm& P, const BiForm& Q) {
    if (Q.is_zero())
        throw DomainError("division by the zero biform");
    if (P.is_zero()) {
        if (P.is_zero_object())
            return BiForm();
        return BiForm(P.xorder() - Q.xorder(), P.yorder() - Q.yorder());
    }
    const int mq = P.xorder() - Q.xorder();
    const int nq = P.yorder() - Q.yorder();
    if (mq < 0 || nq < 0)
        throw DivisionError("quotient bi-order would be negative; remainder " + P.str());

    const auto [qi, qj] = leading(Q);
    const Rational& qlead = Q.coeff(qi, qj);
    BiForm rem = P;
    BiForm quot(mq, nq);
    // Exact division cancels the lex-least term of the remainder each round;
    // a required quotient monomial outside the (mq, nq) grid proves
    // non-divisibility (leading terms are multiplicative under lex order).
    while (!rem.is_zero()) {
        const auto [pi, pj] = leading(rem);
        const int ti = pi - qi, tj = pj - qj;
        if (ti < 0 || ti > mq || tj < 0 || tj > nq)
            throw DivisionError("non-exact division, remainder " + rem.str());
        Rational c = rem.coeff(pi, pj) / qlead;
        quot.set_coeff(ti, tj, quot.coeff(ti, tj) + c);
        for (int i = qi; i <= Q.xorder(); ++i)
            for (int j = 0; j <= Q.yorder(); ++j) {
                if (Q.coeff(i, j) == 0)
                    continue;
                rem.set_coeff(ti + i, tj + j, rem.coeff(ti + i, tj + j) - c * Q.coeff(i, j));
            }
    }
    return quot;
}

std::string BiForm::str() const {
    if (xorder_ < 0 || is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto append_var = [](std::string& mono, const char* v, int p) {
        if (p <= 0)
            return;
        if (!mono.empty())
            mono += "*";
        mono += v;
        if (p > 1)
            mono += "^" + std::to_string(p);
    };
    for (int i = 0; i <= xorder_; ++i)
        for (int j = 0; j <= yorder_; ++j) {
            const Rational& c = coeff(i, j);
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
            std::string mono;
            append_var(mono, "x0", xorder_ - i);
            append_var(mono, "x1", i);
            append_var(mono, "y0", yorder_ - j);
            append_var(mono, "y1", j);
            if (mono.empty())
                os << rational_str(a);
            else if (a == 1)
                os << mono;
            else
                os << rational_str(a) << "*" << mono;
        }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiForm& f) {
    return os << f.str();
}

} // namespace bezout
