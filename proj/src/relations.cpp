#include "bezout/relations.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "bezout/errors.hpp"
#include "bezout/linear_map.hpp"
#include "bezout/random_forms.hpp"
#include "bezout/transvectant.hpp"

namespace bezout {

std::string CovariantExpr::str() const {
    switch (kind) {
        case Kind::Arg:
            return name;
        case Kind::Transvect:
            return "(" + lhs->str() + "," + rhs->str() + ")_" + std::to_string(index);
        case Kind::Product:
            return lhs->str() + "*" + rhs->str();
        case Kind::Power:
            return lhs->str() + "^" + std::to_string(index);
    }
    return {};
}

void CovariantExpr::collect_args(std::vector<std::string>& names) const {
    switch (kind) {
        case Kind::Arg:
            names.push_back(name);
            return;
        case Kind::Transvect:
        case Kind::Product:
            lhs->collect_args(names);
            rhs->collect_args(names);
            return;
        case Kind::Power:
            lhs->collect_args(names);
            return;
    }
}

namespace {

CovariantExpr make_node(CovariantExpr::Kind kind, CovariantExpr lhs, CovariantExpr rhs,
                        int index) {
    CovariantExpr e;
    e.kind = kind;
    e.lhs = std::make_shared<CovariantExpr>(std::move(lhs));
    e.rhs = rhs.kind == CovariantExpr::Kind::Arg && rhs.name.empty()
                ? nullptr
                : std::make_shared<CovariantExpr>(std::move(rhs));
    e.index = index;
    return e;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    CovariantExpr parse() {
        CovariantExpr e = expr();
        skip();
        if (pos_ != s_.size())
            throw ParseError("trailing input in covariant expression: '" + s_.substr(pos_) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in covariant expression");
    }

    int uint_lit() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer in covariant expression");
        if (pos_ - start > 4) throw ParseError("integer literal too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    CovariantExpr expr() {
        CovariantExpr e = factor();
        while (eat('*')) e = make_node(CovariantExpr::Kind::Product, std::move(e), factor(), 0);
        return e;
    }

    CovariantExpr factor() {
        CovariantExpr a = atom();
        if (eat('^'))
            return make_node(CovariantExpr::Kind::Power, std::move(a), CovariantExpr{}, uint_lit());
        return a;
    }

    CovariantExpr atom() {
        if (eat('(')) {
            CovariantExpr l = expr();
            expect(',');
            CovariantExpr r = expr();
            expect(')');
            expect('_');
            return make_node(CovariantExpr::Kind::Transvect, std::move(l), std::move(r), uint_lit());
        }
        skip();
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a name or '(' in covariant expression");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        CovariantExpr e;
        e.kind = CovariantExpr::Kind::Arg;
        e.name = s_.substr(start, pos_ - start);
        return e;
    }
};

} // namespace

CovariantExpr parse_covariant_expr(const std::string& text) { return ExprParser(text).parse(); }

BinaryForm eval_covariant(const CovariantExpr& expr, const Assignment& args) {
    switch (expr.kind) {
        case CovariantExpr::Kind::Arg: {
            auto it = args.find(expr.name);
            if (it == args.end()) throw DomainError("unbound argument '" + expr.name + "'");
            return it->second;
        }
        case CovariantExpr::Kind::Transvect:
            return transvectant(eval_covariant(*expr.lhs, args), eval_covariant(*expr.rhs, args),
                                expr.index);
        case CovariantExpr::Kind::Product:
            return eval_covariant(*expr.lhs, args) * eval_covariant(*expr.rhs, args);
        case CovariantExpr::Kind::Power:
            return eval_covariant(*expr.lhs, args).pow(expr.index);
    }
    throw DomainError("malformed covariant expression");
}

CovariantMonomialBasis CovariantMonomialBasis::parse(const std::vector<std::string>& texts) {
    CovariantMonomialBasis b;
    b.entries.reserve(texts.size());
    for (const auto& t : texts) b.entries.push_back(parse_covariant_expr(t));
    return b;
}

std::vector<std::string> CovariantMonomialBasis::argument_names() const {
    std::vector<std::string> names;
    for (const auto& e : entries) e.collect_args(names);
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

namespace {

std::vector<BinaryForm> eval_basis(const CovariantMonomialBasis& basis, const Assignment& a) {
    std::vector<BinaryForm> out;
    out.reserve(basis.entries.size());
    int order = -1;
    for (const auto& e : basis.entries) {
        BinaryForm f = eval_covariant(e, a);
        if (f.is_zero_object())
            throw DomainError("basis entry " + e.str() + " has no definite order here");
        if (order < 0)
            order = f.order();
        else if (f.order() != order)
            throw DomainError("basis entries disagree on the target order");
        out.push_back(std::move(f));
    }
    return out;
}

void append_rows(std::vector<std::vector<Rational>>& rows, const CovariantMonomialBasis& basis,
                 const Assignment& a) {
    const std::vector<BinaryForm> vals = eval_basis(basis, a);
    const int order = vals.front().order();
    for (int c = 0; c <= order; ++c) {
        std::vector<Rational> row(vals.size());
        for (std::size_t j = 0; j < vals.size(); ++j) row[j] = vals[j].coeff(c);
        rows.push_back(std::move(row));
    }
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows,
                                             int cols) {
    LinearMapQ m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    return m.kernel_basis();
}

} // namespace

RelationSolution solve_undetermined(const CovariantMonomialBasis& basis,
                                    const std::vector<Assignment>& specializations,
                                    const std::function<Assignment()>& sampler) {
    const int n = static_cast<int>(basis.entries.size());
    if (n < 2) throw DomainError("solve_undetermined needs at least two basis entries");

    std::vector<std::vector<Rational>> rows;
    for (const auto& a : specializations) append_rows(rows, basis, a);

    std::vector<std::vector<Rational>> kernel = nullspace(rows, n);
    int extra = 0;
    while (kernel.size() > 1 && sampler && extra < 60) {
        append_rows(rows, basis, sampler());
        ++extra;
        kernel = nullspace(rows, n);
    }
    if (kernel.empty())
        throw NoRelationError("no linear relation vanishes on the given specializations");
    if (kernel.size() > 1)
        throw AmbiguousRelationError("specializations leave the relation underdetermined");

    std::vector<Rational> v = kernel.front();
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    const Rational scale = v[lead];
    for (auto& c : v) c /= scale;

    if (sampler) {
        for (int t = 0; t < 5; ++t) {
            const std::vector<BinaryForm> vals = eval_basis(basis, sampler());
            BinaryForm acc(vals.front().order());
            for (std::size_t j = 0; j < vals.size(); ++j) acc = acc + v[j] * vals[j];
            if (!acc.is_zero())
                throw NoRelationError("candidate relation fails on a fresh specialization");
        }
    }
    return RelationSolution{std::move(v)};
}

Assignment pencil_assignment(const CovariantMonomialBasis& basis, const Pencil& p) {
    Assignment out;
    for (const std::string& name : basis.argument_names()) {
        if (name.size() < 2 || name[0] != 'M' ||
            !std::all_of(name.begin() + 1, name.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw DomainError("pencil assignment expects names of the shape M<k>, got '" + name +
                              "'");
        const int k = std::stoi(name.substr(1));
        out[name] = transvectant(p.A, p.B, k);
    }
    return out;
}

namespace {

std::vector<Assignment> standard_specializations(const CovariantMonomialBasis& basis, int d) {
    const std::vector<Pencil> pencils = {
        Pencil(BinaryForm::monomial(d, 0), BinaryForm::monomial(d, d)),
        Pencil(BinaryForm::monomial(d, 1), BinaryForm::monomial(d, d)),
        Pencil(BinaryForm::monomial(d, 2), BinaryForm::monomial(d, d)),
        Pencil(BinaryForm::monomial(d, 1), BinaryForm::monomial(d, d - 1)),
    };
    std::vector<Assignment> out;
    out.reserve(pencils.size());
    for (const auto& p : pencils) out.push_back(pencil_assignment(basis, p));
    return out;
}

std::function<Assignment()> pencil_sampler(const CovariantMonomialBasis& basis, int d,
                                           std::uint64_t seed) {
    auto sampler = std::make_shared<FormSampler>(seed);
    return [basis, d, sampler]() { return pencil_assignment(basis, sampler->pencil(d)); };
}

} // namespace

RelationSolution derive_relation(const CovariantMonomialBasis& basis, int d, std::uint64_t seed) {
    if (d < 3) throw DomainError("derive_relation needs d >= 3");
    return solve_undetermined(basis, standard_specializations(basis, d),
                              pencil_sampler(basis, d, seed));
}

std::array<Rational, 4> t5_alpha(int d) {
    if (d < 5) throw DomainError("t5 coefficients need d >= 5");
    const Integer D = d;
    const Integer t = 2 * D - 3;
    return {
        make_rational(-2 * t * t, D * (D - 2)),
        make_rational(4 * t * (D - 3), D * (D - 2)),
        Rational(1),
        make_rational((D - 3) * (D - 4) * t * t, D * (2 * D - 5) * (2 * D - 7) * (D - 2)),
    };
}

std::array<Rational, 6> t7_beta(int d) {
    if (d < 7) throw DomainError("t7 coefficients need d >= 7");
    const Integer D = d;
    const Integer t3 = 2 * D - 3, t5 = 2 * D - 5, t7 = 2 * D - 7;
    return {
        make_rational(-8 * t5 * t7 * t3, D * (D - 1) * (4 * D - 13)),
        make_rational(-60 * t7 * t5, D * (D - 1) * (4 * D - 13)),
        make_rational(12 * t3 * (D - 5), D * (4 * D - 13)),
        make_rational(20 * t5 * t7 * (D - 3), (D - 1) * (4 * D - 13) * t3),
        Rational(1),
        make_rational((D - 5) * (D - 6) * t3 * t5, D * (D - 1) * (2 * D - 9) * (2 * D - 11)),
    };
}

std::array<Rational, 4> derive_t5_alpha(int d, std::uint64_t seed) {
    if (d < 5) throw DomainError("t5 derivation needs d >= 5");
    const CovariantMonomialBasis basis =
        CovariantMonomialBasis::parse({"(M1,M1)_4", "(M1,M3)_2", "M3^2", "M1*M5"});
    const RelationSolution sol = derive_relation(basis, d, seed);
    const std::vector<Rational>& v = sol.coefficients;
    if (v[2] == 0) throw NoRelationError("derived relation misses the T3^2 term");
    return {v[0] / v[2], v[1] / v[2], Rational(1), -v[3] / v[2]};
}

std::array<Rational, 6> derive_t7_beta(int d, std::uint64_t seed) {
    if (d < 7) throw DomainError("t7 derivation needs d >= 7");
    const CovariantMonomialBasis basis = CovariantMonomialBasis::parse(
        {"(M1,M1)_6", "(M1,M3)_4", "(M1,M5)_2", "(M3,M3)_2", "M3*M5", "M1*M7"});
    const RelationSolution sol = derive_relation(basis, d, seed);
    const std::vector<Rational>& v = sol.coefficients;
    if (v[4] == 0) throw NoRelationError("derived relation misses the T3 T5 term");
    return {v[0] / v[4], v[1] / v[4], v[2] / v[4], v[3] / v[4], Rational(1), -v[5] / v[4]};
}

namespace {

std::vector<Rational> primitive_integer(std::vector<Rational> v) {
    Integer l = 1;
    for (const auto& c : v) l = lcm(l, denominator(c));
    Integer g = 0;
    for (auto& c : v) {
        c *= l;
        g = gcd(g, numerator(c));
    }
    if (g == 0) g = 1;
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead < v.size() && v[lead] < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

} // namespace

std::vector<Rational> derive_xi_d4(std::uint64_t seed) {
    const CovariantMonomialBasis basis =
        CovariantMonomialBasis::parse({"(M1,M1)_4", "(M1,M3)_2", "M3^2"});
    return primitive_integer(derive_relation(basis, 4, seed).coefficients);
}

std::vector<Rational> derive_xi_d3(std::uint64_t seed) {
    const CovariantMonomialBasis basis = CovariantMonomialBasis::parse({"(M1,M1)_4", "M3^2"});
    return derive_relation(basis, 3, seed).coefficients;
}

BinaryForm t5_formula(const BinaryForm& T1, const BinaryForm& T3in, int d) {
    if (d < 5) throw DomainError("t5_formula requires d >= 5");
    if (T1.is_zero() || T1.order() != 2 * d - 2)
        throw DomainError("t5_formula: T1 must be nonzero of order 2d-2");
    const BinaryForm T3 = T3in.is_zero_object() ? BinaryForm(2 * d - 6) : T3in;
    if (T3.order() != 2 * d - 6) throw DomainError("t5_formula: T3 must have order 2d-6");
    const auto a = t5_alpha(d);
    if (a[3] == 0) throw DomainError("t5_formula: leading coefficient vanishes");
    const BinaryForm num = (a[0] / a[3]) * transvectant(T1, T1, 4) +
                           (a[1] / a[3]) * transvectant(T1, T3, 2) + (a[2] / a[3]) * (T3 * T3);
    return exact_divide(num, T1);
}

BinaryForm t7_formula(const BinaryForm& T1, const BinaryForm& T3in, const BinaryForm& T5in,
                      int d) {
    if (d < 7) throw DomainError("t7_formula requires d >= 7");
    if (T1.is_zero() || T1.order() != 2 * d - 2)
        throw DomainError("t7_formula: T1 must be nonzero of order 2d-2");
    const BinaryForm T3 = T3in.is_zero_object() ? BinaryForm(2 * d - 6) : T3in;
    const BinaryForm T5 = T5in.is_zero_object() ? BinaryForm(2 * d - 10) : T5in;
    if (T3.order() != 2 * d - 6) throw DomainError("t7_formula: T3 must have order 2d-6");
    if (T5.order() != 2 * d - 10) throw DomainError("t7_formula: T5 must have order 2d-10");
    const auto b = t7_beta(d);
    if (b[5] == 0) throw DomainError("t7_formula: leading coefficient vanishes");
    const BinaryForm num =
        (b[0] / b[5]) * transvectant(T1, T1, 6) + (b[1] / b[5]) * transvectant(T1, T3, 4) +
        (b[2] / b[5]) * transvectant(T1, T5, 2) + (b[3] / b[5]) * transvectant(T3, T3, 2) +
        (b[4] / b[5]) * (T3 * T5);
    return exact_divide(num, T1);
}

Rational sylvester_resultant(const BinaryForm& A, const BinaryForm& B) {
    if (A.is_zero_object() || B.is_zero_object() || A.order() != B.order())
        throw DomainError("sylvester_resultant expects two forms of one order");
    const int d = A.order();
    if (d == 0) return Rational(1);
    LinearMapQ m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= d; ++j) {
            m.at(i, i + j) = A.coeff(j);
            m.at(d + i, i + j) = B.coeff(j);
        }
    return m.determinant();
}

Rational resultant_d3(const BinaryForm& T1, const BinaryForm& T3) {
    if (T1.is_zero_object() || T1.order() != 4)
        throw DomainError("resultant_d3: T1 must have order 4");
    if (T3.is_zero_object() || T3.order() != 0)
        throw DomainError("resultant_d3: T3 must have order 0");
    const Rational a = transvectant(T1, T1, 4).coeff(0);
    const Rational b = transvectant(T1, transvectant(T1, T1, 2), 4).coeff(0);
    return T3.coeff(0) * a - rat(6) * b;
}

Rational resultant_d3_constant() { return rat(1, 3); }

bool jacobian_predicate(const BinaryForm& A, const BinaryForm& M) {
    if (A.is_zero_object() || A.order() < 1)
        throw DomainError("jacobian_predicate: A must have order >= 1");
    const int d = A.order();
    const BinaryForm Mn = M.is_zero_object() ? BinaryForm(2 * d - 2) : M;
    if (Mn.order() != 2 * d - 2)
        throw DomainError("jacobian_predicate: M must have order 2d-2");
    const LinearMapQ map = LinearMapQ::from_operator(
        d, 2 * d - 2, [&A](const BinaryForm& b) { return transvectant(A, b, 1); });
    std::vector<Rational> rhs(2 * d - 1);
    for (int i = 0; i <= 2 * d - 2; ++i) rhs[i] = Mn.coeff(i);
    return map.solve(rhs).has_value();
}

bool jacobian_criterion_d2(const BinaryForm& A, const BinaryForm& M) {
    if (A.is_zero_object() || A.order() != 2 || M.is_zero_object() || M.order() != 2)
        throw DomainError("jacobian_criterion_d2 expects orders (2, 2)");
    return transvectant(A, M, 2).is_zero();
}

bool jacobian_criterion_d3(const BinaryForm& A, const BinaryForm& M) {
    if (A.is_zero_object() || A.order() != 3 || M.is_zero_object() || M.order() != 4)
        throw DomainError("jacobian_criterion_d3 expects orders (3, 4)");
    return transvectant(transvectant(A, M, 2), A, 1).is_zero();
}

QCovariantsD6 q_covariants_d6(const BinaryForm& T1) {
    if (T1.is_zero_object() || T1.order() != 6)
        throw DomainError("q_covariants_d6 expects a form of order 6");
    QCovariantsD6 q;
    q.q20 = transvectant(T1, T1, 6);
    q.q24 = transvectant(T1, T1, 4);
    q.q28 = transvectant(T1, T1, 2);
    q.q32 = transvectant(T1, q.q24, 4);
    q.q36 = transvectant(T1, q.q24, 2);
    q.q38 = transvectant(T1, q.q24, 1);
    q.q44 = transvectant(T1, q.q32, 2);
    return q;
}

BinaryForm minimal_equation_residual_d4(const BinaryForm& A, const BinaryForm& B) {
    if (A.is_zero_object() || A.order() != 4 || B.is_zero_object() || B.order() != 4)
        throw DomainError("minimal_equation_residual_d4 expects two order-4 forms");
    const BinaryForm T1 = transvectant(A, B, 1);
    const BinaryForm T3 = transvectant(A, B, 3);
    const QCovariantsD6 q = q_covariants_d6(T1);
    const BinaryForm L2 = rat(-125, 8) * q.q24;
    const BinaryForm L3 = rat(625, 24) * q.q36 + rat(125, 36) * (T1 * q.q20);
    const BinaryForm L4 = rat(3125, 48) * (q.q24 * q.q24) - rat(625, 96) * (q.q20 * q.q28) -
                          rat(3125, 96) * (T1 * q.q32);
    const BinaryForm L5 = rat(3125, 64) * (T1 * q.q44) + rat(3125, 64) * (q.q32 * q.q28) -
                          rat(3125, 16) * (q.q36 * q.q24) -
                          rat(3125, 192) * (T1 * q.q20 * q.q24);
    return T3.pow(5) + L2 * T3.pow(3) + L3 * T3.pow(2) + L4 * T3 + L5;
}

Integer catalan_rho(int d) {
    if (d < 1) throw DomainError("catalan_rho requires d >= 1");
    return binomial(2 * d - 2, d - 1) / d;
}

} // namespace bezout
