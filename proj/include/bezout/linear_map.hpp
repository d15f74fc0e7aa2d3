#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Dense exact matrix over the rationals, row-major, with optional
// domain/codomain order metadata for maps between form spaces
// (columns index the domain basis, rows the codomain basis).
class LinearMapQ {
public:
    LinearMapQ(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    int domain_order = -1;
    int codomain_order = -1;

    int rank() const;

    // Canonical basis of {v : Mv = 0}: the reduced row echelon basis of the
    // kernel subspace, so the result is independent of elimination order.
    std::vector<std::vector<Rational>> kernel_basis() const;

    // A particular solution of Mx = b, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    // Exact determinant; square matrices only.
    Rational determinant() const;

    // Matrix of a linear operator between form spaces, built by feeding the
    // monomial basis x0^(d-i) x1^i of the domain through op.
    static LinearMapQ from_operator(int domain_order, int codomain_order,
                                    const std::function<BinaryForm(const BinaryForm&)>& op);

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// Reduced row echelon basis of the span of the given vectors (all of equal
// length); canonical representative of the subspace.
std::vector<std::vector<Rational>> rref_basis(std::vector<std::vector<Rational>> vecs);

// Rank of a list of forms of equal order, via their coefficient matrix.
int span_rank(const std::vector<BinaryForm>& forms);

} // namespace bezout
