#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bezout/bezoutiant.hpp"
#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"
#include "bezout/errors.hpp"
#include "bezout/form_parser.hpp"
#include "bezout/json_io.hpp"
#include "bezout/reduction.hpp"
#include "bezout/relations.hpp"
#include "bezout/transvectant.hpp"
#include "bezout/verify.hpp"
#include "bezout/wronskian_ode.hpp"

namespace {

using namespace bezout;

void emit_form(const BinaryForm& f, bool json) {
    if (json)
        std::cout << form_to_json(f).dump() << "\n";
    else
        std::cout << f.str() << "\n";
}

void emit_biform(const BiForm& f, bool json) {
    if (json)
        std::cout << biform_to_json(f).dump() << "\n";
    else
        std::cout << f.str() << "\n";
}

void emit_series(const TransvectantSeries& s, bool json) {
    if (json) {
        std::cout << series_to_json(s).dump() << "\n";
        return;
    }
    for (std::size_t r = 0; r < s.terms.size(); ++r)
        std::cout << "T" << 2 * r + 1 << " = " << s.terms[r].str() << "\n";
}

OdeParams ode_params_from(int d, const std::string& m_text, const std::string& n_text) {
    if (d < 2) throw DomainError("--d must be at least 2");
    const BinaryForm M = parse_form(m_text, 2 * d - 2);
    BinaryForm N;
    if (!n_text.empty()) {
        if (2 * d - 6 >= 0) {
            N = parse_form(n_text, 2 * d - 6);
        } else if (!parse_form(n_text).is_zero()) {
            throw DomainError("N must vanish when 2d-6 < 0");
        }
    }
    return OdeParams(d, M, N);
}

void parse_d_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw DomainError("--d expects <n> or <a..b>, got '" + text + "'");
    }
}

InvariantKind kind_from(const std::string& name) {
    if (name == "auto") return InvariantKind::Auto;
    if (name == "deg2") return InvariantKind::Degree2;
    return InvariantKind::Degree4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact transvectant calculus for pencils of binary forms"};
    app.require_subcommand(1);
    int rc = 0;

    struct TransvectOpts {
        int r = 0;
        std::string e, f;
        bool json = false;
    };
    auto tv = std::make_shared<TransvectOpts>();
    auto* tv_cmd = app.add_subcommand("transvect", "r-th transvectant of two forms");
    tv_cmd->add_option("--r", tv->r, "transvectant index")->required();
    tv_cmd->add_option("E", tv->e, "first form")->required();
    tv_cmd->add_option("F", tv->f, "second form")->required();
    tv_cmd->add_flag("--json", tv->json, "emit JSON");
    tv_cmd->callback(
        [tv]() { emit_form(transvectant(parse_form(tv->e), parse_form(tv->f), tv->r), tv->json); });

    struct PolarOpts {
        int m = 0;
        std::string e;
        bool json = false;
    };
    auto po = std::make_shared<PolarOpts>();
    auto* po_cmd = app.add_subcommand("polar", "m-th polar of a form as a biform");
    po_cmd->add_option("--m", po->m, "polarization count")->required();
    po_cmd->add_option("E", po->e, "form")->required();
    po_cmd->add_flag("--json", po->json, "emit JSON");
    po_cmd->callback([po]() { emit_biform(polar(parse_form(po->e), po->m), po->json); });

    struct GordanOpts {
        int a1 = 0, a2 = 0, a3 = 0;
        std::string e, f, g;
        bool json = false;
    };
    auto go = std::make_shared<GordanOpts>();
    auto* go_cmd = app.add_subcommand("gordan-check", "series residual for a legal index triple");
    go_cmd->add_option("--a1", go->a1, "index a1")->required();
    go_cmd->add_option("--a2", go->a2, "index a2")->required();
    go_cmd->add_option("--a3", go->a3, "index a3")->required();
    go_cmd->add_option("E", go->e, "first form")->required();
    go_cmd->add_option("F", go->f, "second form")->required();
    go_cmd->add_option("G", go->g, "third form")->required();
    go_cmd->add_flag("--json", go->json, "emit JSON");
    go_cmd->callback([go]() {
        const BinaryForm E = parse_form(go->e), F = parse_form(go->f), G = parse_form(go->g);
        const GordanParams params(go->a1, go->a2, go->a3, E.order(), F.order(), G.order());
        emit_form(gordan_residual(E, F, G, params), go->json);
    });

    struct PairOpts {
        std::string a, b;
        bool json = false;
    };
    auto bz = std::make_shared<PairOpts>();
    auto* bz_cmd = app.add_subcommand("bezout", "bezoutiant biform of a pencil");
    bz_cmd->add_option("A", bz->a, "first form")->required();
    bz_cmd->add_option("B", bz->b, "second form")->required();
    bz_cmd->add_flag("--json", bz->json, "emit JSON");
    bz_cmd->callback(
        [bz]() { emit_biform(bezoutiant(Pencil(parse_form(bz->a), parse_form(bz->b))), bz->json); });

    auto ty = std::make_shared<PairOpts>();
    auto* ty_cmd = app.add_subcommand("taylor", "omega-Taylor decomposition of the bezoutiant");
    ty_cmd->add_option("A", ty->a, "first form")->required();
    ty_cmd->add_option("B", ty->b, "second form")->required();
    ty_cmd->add_flag("--json", ty->json, "emit JSON");
    ty_cmd->callback([ty]() {
        const Pencil p(parse_form(ty->a), parse_form(ty->b));
        emit_series(taylor_decompose(bezoutiant(p), p.d()), ty->json);
    });

    auto se = std::make_shared<PairOpts>();
    auto* se_cmd = app.add_subcommand("series", "odd transvectant series of a pencil");
    se_cmd->add_option("A", se->a, "first form")->required();
    se_cmd->add_option("B", se->b, "second form")->required();
    se_cmd->add_flag("--json", se->json, "emit JSON");
    se_cmd->callback([se]() {
        emit_series(odd_series(Pencil(parse_form(se->a), parse_form(se->b))), se->json);
    });

    struct OdeOpts {
        int d = 0;
        std::string m, n, f;
        int r = -1;
        bool json = false;
    };

    auto ps = std::make_shared<OdeOpts>();
    auto* ps_cmd = app.add_subcommand("psi", "apply the differential operator of (M, N)");
    ps_cmd->add_option("--d", ps->d, "order of the argument space")->required();
    ps_cmd->add_option("--M", ps->m, "order 2d-2 parameter form")->required();
    ps_cmd->add_option("--N", ps->n, "order 2d-6 parameter form");
    ps_cmd->add_option("F", ps->f, "order-d form")->required();
    ps_cmd->add_flag("--json", ps->json, "emit JSON");
    ps_cmd->callback([ps]() {
        const OdeParams params = ode_params_from(ps->d, ps->m, ps->n);
        emit_form(psi_apply(params, parse_form(ps->f, ps->d)), ps->json);
    });

    auto ke = std::make_shared<OdeOpts>();
    auto* ke_cmd = app.add_subcommand("kernel", "canonical kernel basis of the (M, N) operator");
    ke_cmd->add_option("--d", ke->d, "order of the argument space")->required();
    ke_cmd->add_option("--M", ke->m, "order 2d-2 parameter form")->required();
    ke_cmd->add_option("--N", ke->n, "order 2d-6 parameter form");
    ke_cmd->add_flag("--json", ke->json, "emit JSON");
    ke_cmd->callback([ke]() {
        const std::vector<BinaryForm> basis = psi_kernel(ode_params_from(ke->d, ke->m, ke->n));
        if (ke->json) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& f : basis) out.push_back(form_to_json(f));
            std::cout << out.dump() << "\n";
        } else if (basis.empty()) {
            std::cout << "(empty)\n";
        } else {
            for (const auto& f : basis) std::cout << f.str() << "\n";
        }
    });

    auto ph = std::make_shared<OdeOpts>();
    auto* ph_cmd = app.add_subcommand("phi", "realizability covariants of (M, N)");
    ph_cmd->add_option("--d", ph->d, "order of the argument space")->required();
    ph_cmd->add_option("--M", ph->m, "order 2d-2 parameter form")->required();
    ph_cmd->add_option("--N", ph->n, "order 2d-6 parameter form");
    ph_cmd->add_option("--r", ph->r, "single index in 0..d (all when omitted)");
    ph_cmd->add_flag("--json", ph->json, "emit JSON");
    ph_cmd->callback([ph]() {
        const OdeParams params = ode_params_from(ph->d, ph->m, ph->n);
        if (ph->r >= 0) {
            emit_form(phi_covariant(params, ph->r), ph->json);
            return;
        }
        if (ph->json) {
            nlohmann::json out = nlohmann::json::array();
            for (int r = 0; r <= ph->d; ++r) out.push_back(form_to_json(phi_covariant(params, r)));
            std::cout << out.dump() << "\n";
        } else {
            for (int r = 0; r <= ph->d; ++r)
                std::cout << "phi_" << r << " = " << phi_covariant(params, r).str() << "\n";
        }
    });

    auto re = std::make_shared<OdeOpts>();
    auto* re_cmd = app.add_subcommand("recover", "pencil with M = lambda T1, N = lambda T3");
    re_cmd->add_option("--d", re->d, "order of the argument space")->required();
    re_cmd->add_option("--M", re->m, "order 2d-2 parameter form")->required();
    re_cmd->add_option("--N", re->n, "order 2d-6 parameter form");
    re_cmd->add_flag("--json", re->json, "emit JSON");
    re_cmd->callback([re]() {
        const RecoveredPencil rp = recover_pencil(ode_params_from(re->d, re->m, re->n));
        if (re->json) {
            std::cout << nlohmann::json{{"A", form_to_json(rp.pencil.A)},
                                        {"B", form_to_json(rp.pencil.B)},
                                        {"lambda", rational_str(rp.lambda)}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "A = " << rp.pencil.A.str() << "\n";
            std::cout << "B = " << rp.pencil.B.str() << "\n";
            std::cout << "lambda = " << rational_str(rp.lambda) << "\n";
        }
    });

    auto rz = std::make_shared<OdeOpts>();
    auto* rz_cmd = app.add_subcommand("realizable", "do all phi covariants of (M, N) vanish");
    rz_cmd->add_option("--d", rz->d, "order of the argument space")->required();
    rz_cmd->add_option("--M", rz->m, "order 2d-2 parameter form")->required();
    rz_cmd->add_option("--N", rz->n, "order 2d-6 parameter form");
    rz_cmd->add_flag("--json", rz->json, "emit JSON");
    rz_cmd->callback([rz]() {
        const bool ok = realizable(ode_params_from(rz->d, rz->m, rz->n));
        if (rz->json)
            std::cout << nlohmann::json{{"realizable", ok}}.dump() << "\n";
        else
            std::cout << (ok ? "true" : "false") << "\n";
    });

    struct ReduceOpts {
        std::string invariant = "auto";
        std::string a, b;
        bool json = false;
    };
    auto rd = std::make_shared<ReduceOpts>();
    auto* rd_cmd = app.add_subcommand("reduce", "reduced second generator of a pencil");
    rd_cmd->add_option("--invariant", rd->invariant, "invariant branch")
        ->check(CLI::IsMember({"auto", "deg2", "deg4"}));
    rd_cmd->add_option("A", rd->a, "first form")->required();
    rd_cmd->add_option("B", rd->b, "second form")->required();
    rd_cmd->add_flag("--json", rd->json, "emit JSON");
    rd_cmd->callback([rd]() {
        const Pencil p(parse_form(rd->a), parse_form(rd->b));
        emit_form(reduce(p, kind_from(rd->invariant)), rd->json);
    });

    struct TOpts {
        int d = 0;
        std::string t1, t3, t5;
        bool json = false;
    };
    auto t5o = std::make_shared<TOpts>();
    auto* t5_cmd = app.add_subcommand("t5", "fifth odd transvectant from T1, T3");
    t5_cmd->add_option("--d", t5o->d, "pencil order, d >= 5")->required();
    t5_cmd->add_option("T1", t5o->t1, "order 2d-2 form")->required();
    t5_cmd->add_option("T3", t5o->t3, "order 2d-6 form")->required();
    t5_cmd->add_flag("--json", t5o->json, "emit JSON");
    t5_cmd->callback([t5o]() {
        if (t5o->d < 5) throw DomainError("t5 requires --d >= 5");
        emit_form(t5_formula(parse_form(t5o->t1, 2 * t5o->d - 2),
                             parse_form(t5o->t3, 2 * t5o->d - 6), t5o->d),
                  t5o->json);
    });

    auto t7o = std::make_shared<TOpts>();
    auto* t7_cmd = app.add_subcommand("t7", "seventh odd transvectant from T1, T3, T5");
    t7_cmd->add_option("--d", t7o->d, "pencil order, d >= 7")->required();
    t7_cmd->add_option("T1", t7o->t1, "order 2d-2 form")->required();
    t7_cmd->add_option("T3", t7o->t3, "order 2d-6 form")->required();
    t7_cmd->add_option("T5", t7o->t5, "order 2d-10 form")->required();
    t7_cmd->add_flag("--json", t7o->json, "emit JSON");
    t7_cmd->callback([t7o]() {
        if (t7o->d < 7) throw DomainError("t7 requires --d >= 7");
        emit_form(t7_formula(parse_form(t7o->t1, 2 * t7o->d - 2),
                             parse_form(t7o->t3, 2 * t7o->d - 6),
                             parse_form(t7o->t5, 2 * t7o->d - 10), t7o->d),
                  t7o->json);
    });

    auto rs = std::make_shared<PairOpts>();
    auto* rs_cmd = app.add_subcommand("resultant3", "resultant combination from an order-3 pencil's T1, T3");
    rs_cmd->add_option("T1", rs->a, "order-4 form")->required();
    rs_cmd->add_option("T3", rs->b, "order-0 form")->required();
    rs_cmd->add_flag("--json", rs->json, "emit JSON");
    rs_cmd->callback([rs]() {
        const Rational v = resultant_d3(parse_form(rs->a, 4), parse_form(rs->b, 0));
        if (rs->json)
            std::cout << nlohmann::json{{"value", rational_str(v)}}.dump() << "\n";
        else
            std::cout << rational_str(v) << "\n";
    });

    struct JacobianOpts {
        std::string method = "predicate";
        std::string a, m;
        bool json = false;
    };
    auto jc = std::make_shared<JacobianOpts>();
    auto* jc_cmd = app.add_subcommand("jacobian", "is M a Jacobian partner of A");
    jc_cmd->add_option("--method", jc->method, "decision method")
        ->check(CLI::IsMember({"predicate", "criterion"}));
    jc_cmd->add_option("A", jc->a, "order-d form")->required();
    jc_cmd->add_option("M", jc->m, "order 2d-2 form")->required();
    jc_cmd->add_flag("--json", jc->json, "emit JSON");
    jc_cmd->callback([jc]() {
        const BinaryForm A = parse_form(jc->a);
        if (A.is_zero_object() || A.order() < 1) throw DomainError("A must have order >= 1");
        const BinaryForm M = parse_form(jc->m, 2 * A.order() - 2);
        bool ok;
        if (jc->method == "predicate") {
            ok = jacobian_predicate(A, M);
        } else if (A.order() == 2) {
            ok = jacobian_criterion_d2(A, M);
        } else if (A.order() == 3) {
            ok = jacobian_criterion_d3(A, M);
        } else {
            throw DomainError("covariant criteria exist only for orders 2 and 3");
        }
        if (jc->json)
            std::cout << nlohmann::json{{"jacobian", ok}}.dump() << "\n";
        else
            std::cout << (ok ? "true" : "false") << "\n";
    });

    auto mq = std::make_shared<PairOpts>();
    auto* mq_cmd = app.add_subcommand("mineq4", "minimal-equation residual of an order-4 pencil");
    mq_cmd->add_option("A", mq->a, "order-4 form")->required();
    mq_cmd->add_option("B", mq->b, "order-4 form")->required();
    mq_cmd->add_flag("--json", mq->json, "emit JSON");
    mq_cmd->callback([mq]() {
        emit_form(minimal_equation_residual_d4(parse_form(mq->a, 4), parse_form(mq->b, 4)),
                  mq->json);
    });

    struct DeriveOpts {
        int d = 0;
        std::uint64_t seed = 1;
        std::vector<std::string> entries;
        bool json = false;
    };
    auto dr = std::make_shared<DeriveOpts>();
    auto* dr_cmd = app.add_subcommand("derive-relation",
                                      "undetermined-coefficients relation over a monomial basis");
    dr_cmd->add_option("--d", dr->d, "pencil order for the M<k> arguments, d >= 3")->required();
    dr_cmd->add_option("--seed", dr->seed, "seed for supplementation pencils");
    dr_cmd->add_option("entries", dr->entries, "basis monomials, e.g. (M1,M1)_4 M3^2")
        ->required()
        ->expected(-2);
    dr_cmd->add_flag("--json", dr->json, "emit JSON");
    dr_cmd->callback([dr]() {
        const CovariantMonomialBasis basis = CovariantMonomialBasis::parse(dr->entries);
        const RelationSolution sol = derive_relation(basis, dr->d, dr->seed);
        if (dr->json) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : sol.coefficients) coeffs.push_back(rational_str(c));
            std::cout << nlohmann::json{{"basis", dr->entries}, {"coefficients", coeffs}}.dump()
                      << "\n";
        } else {
            for (std::size_t i = 0; i < sol.coefficients.size(); ++i)
                std::cout << rational_str(sol.coefficients[i]) << "  " << dr->entries[i] << "\n";
        }
    });

    struct RhoOpts {
        int d = 0;
        bool json = false;
    };
    auto rh = std::make_shared<RhoOpts>();
    auto* rh_cmd = app.add_subcommand("rho", "generic fiber cardinality (1/d) C(2d-2, d-1)");
    rh_cmd->add_option("d", rh->d, "order, d >= 1")->required();
    rh_cmd->add_flag("--json", rh->json, "emit JSON");
    rh_cmd->callback([rh]() {
        const Integer v = catalan_rho(rh->d);
        if (rh->json)
            std::cout << nlohmann::json{{"d", rh->d}, {"rho", v.str()}}.dump() << "\n";
        else
            std::cout << v.str() << "\n";
    });

    struct VerifyCliOpts {
        std::string suite;
        std::string d_range;
        int trials = -1;
        std::uint64_t seed = 1;
        bool json = false;
    };
    auto vf = std::make_shared<VerifyCliOpts>();
    auto* vf_cmd = app.add_subcommand("verify", "run a randomized identity suite");
    vf_cmd->add_option("suite", vf->suite, "one of: taylor wronskian gordan reduction t5t7 resultant mineq4 jacobian phi")
        ->required();
    vf_cmd->add_option("--d", vf->d_range, "order or order range, <n> or <a..b>");
    vf_cmd->add_option("--trials", vf->trials, "trials per order");
    vf_cmd->add_option("--seed", vf->seed, "sampler seed");
    vf_cmd->add_flag("--json", vf->json, "emit JSON");
    vf_cmd->callback([vf, &rc]() {
        VerifyOptions opts;
        if (!vf->d_range.empty()) parse_d_range(vf->d_range, opts.d_lo, opts.d_hi);
        opts.trials = vf->trials;
        opts.seed = vf->seed;
        const SuiteReport report = run_suite(vf->suite, opts);
        if (vf->json)
            std::cout << report_to_json(report).dump(2) << "\n";
        else
            std::cout << report_text(report);
        rc = report.ok() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bezout::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
