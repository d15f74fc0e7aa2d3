#include "bezout/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bezout/bezoutiant.hpp"
#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/linear_map.hpp"
#include "bezout/random_forms.hpp"
#include "bezout/reduction.hpp"
#include "bezout/relations.hpp"
#include "bezout/transvectant.hpp"
#include "bezout/wronskian_ode.hpp"

namespace bezout {

namespace {

constexpr int kMaxRecordedFailures = 25;

struct Checker {
    SuiteReport report;

    void check(bool ok, const std::string& inputs, const std::string& expected,
               const std::string& got) {
        if (ok) {
            ++report.passed;
            return;
        }
        ++report.failed;
        if (static_cast<int>(report.failures.size()) < kMaxRecordedFailures)
            report.failures.push_back({inputs, expected, got});
    }
};

struct SuiteDefaults {
    int d_lo, d_hi, trials;
};

std::string pencil_str(const Pencil& p) {
    return "A=" + p.A.str() + " B=" + p.B.str();
}

std::string trial_tag(int d, int t) {
    return "d=" + std::to_string(d) + " trial=" + std::to_string(t);
}

Rational nonzero_scalar(FormSampler& s) {
    long long v;
    do {
        v = s.integer(-9, 9);
    } while (v == 0);
    return rat(v);
}

void run_taylor(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials) {
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int t = 0; t < trials; ++t) {
            const Pencil p = s.pencil(d);
            const std::string tag = trial_tag(d, t) + " " + pencil_str(p);
            const BiForm U = bezoutiant(p);
            const TransvectantSeries dec = taylor_decompose(U, d);
            const TransvectantSeries expect = odd_series(p);
            bool terms_ok = dec.terms.size() == expect.terms.size();
            int bad = -1;
            if (terms_ok)
                for (std::size_t r = 0; r < dec.terms.size(); ++r)
                    if (!(dec.terms[r] == expect.terms[r])) {
                        terms_ok = false;
                        bad = static_cast<int>(r);
                        break;
                    }
            c.check(terms_ok, tag, "decomposition terms equal odd transvectants",
                    terms_ok ? "" : "term " + std::to_string(2 * bad + 1) + " differs");
            const bool round = taylor_reconstruct(dec) == U;
            c.check(round, tag, "reconstruction equals the bezoutiant",
                    round ? "" : "round-trip mismatch");
        }
    }
}

void run_wronskian(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials) {
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int t = 0; t < trials; ++t) {
            const BinaryForm A = s.form(d), B = s.form(d), F = s.form(d);
            const BinaryForm res = wronskian_identity_residual(A, B, F);
            c.check(res.is_zero(),
                    trial_tag(d, t) + " A=" + A.str() + " B=" + B.str() + " F=" + F.str(),
                    "residual = 0", res.is_zero() ? "" : res.str());
        }
    }
}

void run_gordan(Checker& c, FormSampler& s, int trials) {
    for (int t = 0; t < trials; ++t) {
        int e, f, g, a1, a2, a3;
        for (;;) {
            e = static_cast<int>(s.integer(1, 6));
            f = static_cast<int>(s.integer(1, 6));
            g = static_cast<int>(s.integer(1, 6));
            if (s.integer(0, 1) == 0) {
                a1 = 0;
                a2 = static_cast<int>(s.integer(0, std::min(e, g)));
                a3 = static_cast<int>(s.integer(0, std::min(e - a2, f)));
            } else {
                a3 = static_cast<int>(s.integer(0, std::min(e, f)));
                a2 = e - a3;
                if (a2 > g) continue;
                a1 = static_cast<int>(s.integer(0, std::min(f - a3, g - a2)));
            }
            break;
        }
        const BinaryForm E = s.form(e), F = s.form(f), G = s.form(g);
        const GordanParams params(a1, a2, a3, e, f, g);
        const BinaryForm res = gordan_residual(E, F, G, params);
        std::ostringstream tag;
        tag << "trial=" << t << " (e,f,g)=(" << e << "," << f << "," << g << ") (a1,a2,a3)=("
            << a1 << "," << a2 << "," << a3 << ") E=" << E.str() << " F=" << F.str()
            << " G=" << G.str();
        c.check(res.is_zero(), tag.str(), "series residual = 0", res.is_zero() ? "" : res.str());
    }
    const int cg_trials = std::max(1, (2 * trials) / 5);
    for (int t = 0; t < cg_trials; ++t) {
        const int e = static_cast<int>(s.integer(1, 5));
        const int f = static_cast<int>(s.integer(1, 5));
        const BinaryForm E = s.form(e), F = s.form(f);
        const bool ok = clebsch_gordan_sum(clebsch_gordan_expand(E, F)) == BiForm::outer(E, F);
        c.check(ok, "cg trial=" + std::to_string(t) + " E=" + E.str() + " F=" + F.str(),
                "expansion sums to E(x)F(y)", ok ? "" : "sum differs");
    }
}

void run_phi(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials) {
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int t = 0; t < 20; ++t) {
            const Pencil p = s.pencil(d);
            const Rational lambda = nonzero_scalar(s);
            const OdeParams params(d, lambda * transvectant(p.A, p.B, 1),
                                   lambda * transvectant(p.A, p.B, 3));
            const std::string tag =
                "realizable " + trial_tag(d, t) + " " + pencil_str(p) + " lambda=" +
                rational_str(lambda);
            c.check(realizable(params), tag, "all phi covariants vanish", "some phi != 0");
            const std::vector<BinaryForm> kernel = psi_kernel(params);
            c.check(kernel.size() == 2, tag, "kernel dimension 2",
                    "dimension " + std::to_string(kernel.size()));
            bool rec_ok = false;
            std::string got = "recover failed";
            try {
                const RecoveredPencil rp = recover_pencil(params);
                rec_ok = span_rank({p.A, p.B, rp.pencil.A, rp.pencil.B}) == 2;
                if (!rec_ok) got = "recovered span differs";
            } catch (const DomainError& err) {
                got = std::string("recover failed: ") + err.what();
            }
            c.check(rec_ok, tag, "recovered pencil spans the original", got);
        }
        for (int t = 0; t < trials; ++t) {
            const BinaryForm M = s.form(2 * d - 2);
            const BinaryForm N = s.form(2 * d - 6, /*ensure_nonzero=*/false);
            const OdeParams params(d, M, N);
            const bool t1 = realizable(params);
            const bool t2 = psi_kernel(params).size() >= 2;
            bool t3 = false;
            try {
                recover_pencil(params);
                t3 = true;
            } catch (const DomainError&) {
                t3 = false;
            }
            const bool agree = t1 == t2 && t2 == t3;
            std::ostringstream got;
            got << "phi=" << (t1 ? "true" : "false") << " kernel=" << (t2 ? "true" : "false")
                << " recover=" << (t3 ? "true" : "false");
            c.check(agree,
                    "random " + trial_tag(d, t) + " M=" + M.str() + " N=" + N.str(),
                    "three realizability tests agree", agree ? "" : got.str());
        }
    }
}

void run_reduction(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials) {
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int t = 0; t < trials; ++t) {
            Pencil p = s.pencil(d);
            while (invariant_J(p.A) == 0) p = s.pencil(d);
            const std::string tag = trial_tag(d, t) + " " + pencil_str(p);
            const Rational J = invariant_J(p.A);
            const BinaryForm ev = evectant(p.A);
            const BinaryForm beta = reduce(p);
            const Rational mult = -(transvectant(ev, p.B, d).coeff(0) / J);
            const bool red_ok = equal_or_both_zero(beta - p.B, mult * p.A);
            c.check(red_ok, tag, "reduce(A,B) - B = -((Ev,B)_d/J) A",
                    red_ok ? "" : (beta - p.B).str());
            const bool ev_ok = transvectant(ev, p.A, d).coeff(0) == J;
            c.check(ev_ok, tag, "(Ev, A)_d = J", ev_ok ? "" : "evectant pairing differs");
            if (d == 2) {
                const bool shortcut_ok = reduce_d2_special(p) == beta;
                c.check(shortcut_ok, tag, "order-2 shortcut equals reduce",
                        shortcut_ok ? "" : reduce_d2_special(p).str());
            }
        }
    }
}

void run_t5t7(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials,
              std::uint64_t seed) {
    for (int d = std::max(5, d_lo); d <= d_hi; ++d) {
        for (int t = 0; t < trials; ++t) {
            const Pencil p = s.pencil(d);
            const std::string tag = trial_tag(d, t) + " " + pencil_str(p);
            const BinaryForm T1 = transvectant(p.A, p.B, 1);
            const BinaryForm T3 = transvectant(p.A, p.B, 3);
            const BinaryForm t5 = t5_formula(T1, T3, d);
            const bool ok5 = t5 == transvectant(p.A, p.B, 5);
            c.check(ok5, tag, "t5_formula = (A,B)_5", ok5 ? "" : t5.str());
            if (d >= 7) {
                const BinaryForm t7 = t7_formula(T1, T3, t5, d);
                const bool ok7 = t7 == transvectant(p.A, p.B, 7);
                c.check(ok7, tag, "t7_formula = (A,B)_7", ok7 ? "" : t7.str());
            }
        }
    }
    for (int d = std::max(5, d_lo); d <= std::min(9, d_hi); ++d) {
        const auto derived = derive_t5_alpha(d, seed + static_cast<std::uint64_t>(d));
        const auto table = t5_alpha(d);
        const bool ok = std::equal(derived.begin(), derived.end(), table.begin());
        std::ostringstream got;
        for (const auto& x : derived) got << rational_str(x) << " ";
        c.check(ok, "alpha derivation d=" + std::to_string(d), "closed-form alpha table",
                ok ? "" : got.str());
    }
    {
        const std::vector<Rational> xi4 = derive_xi_d4(seed);
        const std::vector<Rational> want = {rat(25), rat(-10), rat(-4)};
        std::ostringstream got;
        for (const auto& x : xi4) got << rational_str(x) << " ";
        c.check(xi4 == want, "xi derivation d=4", "[25, -10, -4]", got.str());
    }
    {
        const std::vector<Rational> xi3 = derive_xi_d3(seed);
        const std::vector<Rational> want = {rat(1), rat(-1, 6)};
        std::ostringstream got;
        for (const auto& x : xi3) got << rational_str(x) << " ";
        c.check(xi3 == want, "xi derivation d=3", "[1, -1/6]", got.str());
    }
}

void run_resultant(Checker& c, FormSampler& s, int trials) {
    const Rational cons = resultant_d3_constant();
    const auto check_pair = [&](const Pencil& p, const std::string& tag) {
        const BinaryForm T1 = transvectant(p.A, p.B, 1);
        const BinaryForm T3 = transvectant(p.A, p.B, 3);
        const Rational lhs = resultant_d3(T1, T3);
        const Rational rhs = cons * sylvester_resultant(p.A, p.B);
        c.check(lhs == rhs, tag + " " + pencil_str(p), rational_str(rhs), rational_str(lhs));
    };
    check_pair(Pencil(BinaryForm::monomial(3, 0), BinaryForm::monomial(3, 3)), "calibration");
    check_pair(Pencil(parse_form("x0^2*x1 - x0*x1^2"), parse_form("x0^3 + 3*x0^2*x1 + 2*x0*x1^2")),
               "special-pair");
    for (int t = 0; t < trials; ++t) check_pair(s.pencil(3), trial_tag(3, t));
}

void run_jacobian(Checker& c, FormSampler& s, int d_lo, int d_hi, int trials) {
    for (int d = d_lo; d <= d_hi; ++d) {
        for (int t = 0; t < trials; ++t) {
            const BinaryForm A = s.form(d);
            const BinaryForm M =
                s.integer(0, 1) == 0 ? transvectant(A, s.form(d), 1) : s.form(2 * d - 2);
            const bool pred = jacobian_predicate(A, M);
            const bool crit = d == 2 ? jacobian_criterion_d2(A, M) : jacobian_criterion_d3(A, M);
            const std::string tag = trial_tag(d, t) + " A=" + A.str() + " M=" + M.str();
            c.check(pred == crit, tag, "criterion agrees with the linear-system test",
                    pred == crit ? ""
                                 : std::string("predicate=") + (pred ? "true" : "false") +
                                       " criterion=" + (crit ? "true" : "false"));
            if (pred) {
                bool divides = true;
                try {
                    exact_divide(transvectant(A, M, 2), A);
                } catch (const DomainError&) {
                    divides = false;
                }
                c.check(divides, tag, "A divides (A,M)_2", divides ? "" : "division fails");
            }
        }
    }
    const BinaryForm A4 = BinaryForm::monomial(4, 2);
    const BinaryForm M4 = BinaryForm::monomial(6, 3);
    const bool pred4 = jacobian_predicate(A4, M4);
    c.check(!pred4, "counterexample A=x0^2*x1^2 M=x0^3*x1^3", "predicate = false",
            pred4 ? "predicate = true" : "");
    bool divides4 = true;
    try {
        exact_divide(transvectant(A4, M4, 2), A4);
    } catch (const DomainError&) {
        divides4 = false;
    }
    c.check(divides4, "counterexample A=x0^2*x1^2 M=x0^3*x1^3", "A divides (A,M)_2",
            divides4 ? "" : "division fails");
}

void run_mineq4(Checker& c, FormSampler& s, int trials) {
    const auto check_pair = [&](const Pencil& p, const std::string& tag) {
        const BinaryForm res = minimal_equation_residual_d4(p.A, p.B);
        c.check(res.is_zero() && res.order() == 10, tag + " " + pencil_str(p),
                "zero form of order 10", res.is_zero() ? "order differs" : res.str());
    };
    check_pair(Pencil(BinaryForm::monomial(4, 0), BinaryForm::monomial(4, 4)), "monomial-pair");
    for (int t = 0; t < trials; ++t) check_pair(s.pencil(4), trial_tag(4, t));
}

} // namespace

std::vector<std::string> suite_names() {
    return {"taylor",    "wronskian", "gordan",  "reduction", "t5t7",
            "resultant", "mineq4",    "jacobian", "phi"};
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    static const std::map<std::string, SuiteDefaults> defaults = {
        {"taylor", {1, 8, 20}},    {"wronskian", {2, 7, 20}}, {"gordan", {0, 0, 50}},
        {"reduction", {2, 7, 20}}, {"t5t7", {5, 9, 20}},      {"resultant", {3, 3, 20}},
        {"mineq4", {4, 4, 20}},    {"jacobian", {2, 3, 100}}, {"phi", {3, 4, 50}},
    };
    const auto it = defaults.find(suite);
    if (it == defaults.end()) throw DomainError("unknown suite '" + suite + "'");

    int d_lo = opts.d_lo >= 0 ? opts.d_lo : it->second.d_lo;
    int d_hi = opts.d_hi >= 0 ? opts.d_hi : it->second.d_hi;
    const int trials = opts.trials >= 0 ? opts.trials : it->second.trials;
    if (d_hi < d_lo) throw DomainError("empty order range");

    static const std::map<std::string, int> min_d = {
        {"taylor", 1}, {"wronskian", 2}, {"reduction", 2}, {"t5t7", 5}, {"phi", 3}};
    const auto mit = min_d.find(suite);
    if (mit != min_d.end() && d_lo < mit->second)
        throw DomainError("suite '" + suite + "' supports d >= " + std::to_string(mit->second));
    if ((suite == "resultant" && (d_lo != 3 || d_hi != 3)) ||
        (suite == "mineq4" && (d_lo != 4 || d_hi != 4)))
        throw DomainError("suite '" + suite + "' runs at a fixed order");
    if (suite == "jacobian" && (d_lo < 2 || d_hi > 3))
        throw DomainError("suite 'jacobian' supports d in 2..3");

    Checker c;
    c.report.suite = suite;
    c.report.seed = opts.seed;
    FormSampler sampler(opts.seed);

    if (suite == "taylor")
        run_taylor(c, sampler, d_lo, d_hi, trials);
    else if (suite == "wronskian")
        run_wronskian(c, sampler, d_lo, d_hi, trials);
    else if (suite == "gordan")
        run_gordan(c, sampler, trials);
    else if (suite == "reduction")
        run_reduction(c, sampler, d_lo, d_hi, trials);
    else if (suite == "t5t7")
        run_t5t7(c, sampler, d_lo, d_hi, trials, opts.seed);
    else if (suite == "resultant")
        run_resultant(c, sampler, trials);
    else if (suite == "mineq4")
        run_mineq4(c, sampler, trials);
    else if (suite == "jacobian")
        run_jacobian(c, sampler, d_lo, d_hi, trials);
    else
        run_phi(c, sampler, d_lo, d_hi, trials);

    return c.report;
}

nlohmann::json report_to_json(const SuiteReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"passed", r.passed},
            {"failed", r.failed},
            {"failures", failures}};
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite=" << r.suite << " seed=" << r.seed << " passed=" << r.passed
        << " failed=" << r.failed << "\n";
    for (const auto& f : r.failures)
        out << "FAIL " << f.inputs << "\n  expected: " << f.expected << "\n  got: " << f.got
            << "\n";
    return out.str();
}

} // namespace bezout
