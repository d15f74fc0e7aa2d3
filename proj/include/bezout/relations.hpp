#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bezout/bezoutiant.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/rational.hpp"

namespace bezout {

// Symbolic covariant monomial over named arguments. Grammar:
//   expr   := factor ('*' factor)*
//   factor := atom ['^' uint]
//   atom   := name | '(' expr ',' expr ')' '_' uint
// where name matches [A-Za-z][A-Za-z0-9]*, '(' always opens a transvectant
// pair, and '_' carries its index. Examples: (M1,M1)_4, M3^2, M1*M5,
// (M1,(M1,M1)_2)_4.
struct CovariantExpr {
    enum class Kind { Arg, Transvect, Product, Power };

    Kind kind = Kind::Arg;
    std::string name;                         // Arg
    std::shared_ptr<CovariantExpr> lhs, rhs;  // Transvect, Product; Power uses lhs
    int index = 0;                            // Transvect order, Power exponent

    std::string str() const;
    void collect_args(std::vector<std::string>& names) const;
};

CovariantExpr parse_covariant_expr(const std::string& text);

using Assignment = std::map<std::string, BinaryForm>;

// Evaluates the monomial; every intermediate must have a definite order.
BinaryForm eval_covariant(const CovariantExpr& expr, const Assignment& args);

struct CovariantMonomialBasis {
    std::vector<CovariantExpr> entries;

    static CovariantMonomialBasis parse(const std::vector<std::string>& texts);
    std::vector<std::string> argument_names() const;
};

// Nonzero coefficient vector v with sum_j v_j basis_j = 0, normalized so the
// first nonzero entry is 1.
struct RelationSolution {
    std::vector<Rational> coefficients;
};

// Finds the one-dimensional nullspace of the specialization matrix. When the
// listed specializations leave more than one candidate and a sampler is
// given, fresh assignments are drawn until the nullspace is a line; the
// result is then re-verified on 5 more sampled assignments.
// Throws NoRelationError when the nullspace is trivial (or a verification
// fails) and AmbiguousRelationError when it stays multi-dimensional.
RelationSolution solve_undetermined(const CovariantMonomialBasis& basis,
                                    const std::vector<Assignment>& specializations,
                                    const std::function<Assignment()>& sampler = {});

// Assignment M<k> -> (A,B)_k for every name appearing in the basis.
Assignment pencil_assignment(const CovariantMonomialBasis& basis, const Pencil& p);

// solve_undetermined over the standard monomial specialization pencils
//   (x0^d, x1^d), (x0^(d-1)x1, x1^d), (x0^(d-2)x1^2, x1^d),
//   (x0^(d-1)x1, x0 x1^(d-1)),
// with seeded random pencils as supplementation; d >= 3.
RelationSolution derive_relation(const CovariantMonomialBasis& basis, int d, std::uint64_t seed);

// Coefficients of the order-(2d-10) identity
//   alpha1 (T1,T1)_4 + alpha2 (T1,T3)_2 + alpha3 T3^2 = alpha4 T1 T5:
//   alpha1 = -2(2d-3)^2/(d(d-2)),  alpha2 = 4(2d-3)(d-3)/(d(d-2)),
//   alpha3 = 1,  alpha4 = (d-3)(d-4)(2d-3)^2/(d(2d-5)(2d-7)(d-2)).
std::array<Rational, 4> t5_alpha(int d);

// Coefficients of the order-(2d-14) identity
//   beta1 (T1,T1)_6 + beta2 (T1,T3)_4 + beta3 (T1,T5)_2
//   + beta4 (T3,T3)_2 + beta5 T3 T5 = beta6 T1 T7.
std::array<Rational, 6> t7_beta(int d);

// Re-derivations by undetermined coefficients over the standard monomial
// specialization pencils, seeded for the random supplementation stage.
std::array<Rational, 4> derive_t5_alpha(int d, std::uint64_t seed);
std::array<Rational, 6> derive_t7_beta(int d, std::uint64_t seed);
// Primitive integer vector on basis {(M1,M1)_4, (M1,M3)_2, M3^2} at d = 4.
std::vector<Rational> derive_xi_d4(std::uint64_t seed);
// Leading-1 vector on basis {(M1,M1)_4, M3^2} at d = 3.
std::vector<Rational> derive_xi_d3(std::uint64_t seed);

// T5 = (1/T1)[(a1/a4)(T1,T1)_4 + (a2/a4)(T1,T3)_2 + (a3/a4)T3^2], d >= 5.
// The division is exact polynomial division; its failure signals that
// (T1, T3) does not come from a pencil.
BinaryForm t5_formula(const BinaryForm& T1, const BinaryForm& T3, int d);

// T7 = (1/T1)[(b1/b6)(T1,T1)_6 + (b2/b6)(T1,T3)_4 + (b3/b6)(T1,T5)_2
//             + (b4/b6)(T3,T3)_2 + (b5/b6)T3 T5], d >= 7.
BinaryForm t7_formula(const BinaryForm& T1, const BinaryForm& T3,
                      const BinaryForm& T5, int d);

// Determinant of the 2d x 2d Sylvester matrix of the coefficient sequences.
Rational sylvester_resultant(const BinaryForm& A, const BinaryForm& B);

// T3 (T1,T1)_4 - 6 (T1,(T1,T1)_2)_4 for an order-3 pencil's T1 (order 4)
// and T3 (order 0); equals resultant_d3_constant() times the resultant.
Rational resultant_d3(const BinaryForm& T1, const BinaryForm& T3);

// Frozen proportionality constant, calibrated once on A = x0^3, B = x1^3.
Rational resultant_d3_constant();

// Exact solvability of (A,B)_1 = M for an order-d form B.
bool jacobian_predicate(const BinaryForm& A, const BinaryForm& M);

// (A,M)_2 = 0, orders (2,2).
bool jacobian_criterion_d2(const BinaryForm& A, const BinaryForm& M);

// ((A,M)_2, A)_1 = 0, orders (3,4).
bool jacobian_criterion_d3(const BinaryForm& A, const BinaryForm& M);

// Covariants of an order-6 form; q_ab has order b and degree a, so
// q_ab(tT1) = t^a q_ab(T1).
struct QCovariantsD6 {
    BinaryForm q20, q24, q28, q32, q36, q38, q44;
};

QCovariantsD6 q_covariants_d6(const BinaryForm& T1);

// T3^5 + L2 T3^3 + L3 T3^2 + L4 T3 + L5 over T1 = (A,B)_1, T3 = (A,B)_3
// for order-4 forms; identically the zero form of order 10 on pencils.
BinaryForm minimal_equation_residual_d4(const BinaryForm& A, const BinaryForm& B);

// (1/d) C(2d-2, d-1), d >= 1.
Integer catalan_rho(int d);

} // namespace bezout
