#include "bezout/linear_map.hpp"

#include <algorithm>

namespace bezout {

LinearMapQ::LinearMapQ(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw DomainError("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

Rational& LinearMapQ::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DomainError("matrix index out of range");
    return a_[static_cast<size_t>(i) * cols_ + j];
}

const Rational& LinearMapQ::at(int i, int j) const {
    return const_cast<LinearMapQ*>(this)->at(i, j);
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col];
        for (size_t j = col; j < cols; ++j)
            m[row][j] /= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0)
                continue;
            Rational f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> rref_basis(std::vector<std::vector<Rational>> vecs) {
    auto pivots = rref(vecs);
    vecs.resize(pivots.size());
    return vecs;
}

int LinearMapQ::rank() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j);
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rational>> LinearMapQ::kernel_basis() const {
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j);
    auto pivots = rref(m);

    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return rref_basis(std::move(basis));
}

std::optional<std::vector<Rational>> LinearMapQ::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw DomainError("right-hand side length mismatch");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_ + 1));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j);
        m[i][cols_] = b[i];
    }
    auto pivots = rref(m);
    std::vector<Rational> x(cols_, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_)
            return std::nullopt; // pivot in the augmented column: inconsistent
        x[pivots[r]] = m[r][cols_];
    }
    return x;
}

Rational LinearMapQ::determinant() const {
    if (rows_ != cols_)
        throw DomainError("determinant of a non-square matrix");
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m[i][j] = at(i, j);
    Rational det(1);
    for (int col = 0; col < cols_; ++col) {
        int sel = -1;
        for (int i = col; i < rows_; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            return Rational(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int i = col + 1; i < rows_; ++i) {
            if (m[i][col] == 0)
                continue;
            Rational f = m[i][col] / m[col][col];
            for (int j = col; j < cols_; ++j)
                m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

LinearMapQ LinearMapQ::from_operator(int domain_order, int codomain_order,
                                     const std::function<BinaryForm(const BinaryForm&)>& op) {
    if (domain_order < 0 || codomain_order < 0)
        throw DomainError("operator matrix needs non-negative orders");
    LinearMapQ m(codomain_order + 1, domain_order + 1);
    m.domain_order = domain_order;
    m.codomain_order = codomain_order;
    for (int j = 0; j <= domain_order; ++j) {
        BinaryForm img = op(BinaryForm::monomial(domain_order, j));
        if (img.is_zero())
            continue;
        if (img.order() != codomain_order)
            throw DomainError("operator image has unexpected order");
        for (int i = 0; i <= codomain_order; ++i)
            m.at(i, j) = img.coeff(i);
    }
    return m;
}

int span_rank(const std::vector<BinaryForm>& forms) {
    if (forms.empty())
        return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& f : forms) {
        if (f.is_zero_object()) {
            m.emplace_back(1, Rational(0));
            continue;
        }
        m.push_back(f.coeffs());
    }
    size_t width = 0;
    for (const auto& r : m)
        width = std::max(width, r.size());
    for (auto& r : m)
        r.resize(width, Rational(0));
    return static_cast<int>(rref(m).size());
}

} // namespace bezout
