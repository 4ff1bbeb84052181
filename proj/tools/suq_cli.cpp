// Command-line front end: parse expressions, dispatch computations, run the
// verification suites, and emit text or JSON.
//
// Exit codes: 0 success, 1 verification/computation failure (the first
// violated identity is named on stderr), 2 usage error (bad syntax, bad
// arguments, unknown names).

#include <CLI11.hpp>
#include <json.hpp>

#include <suq/parse.hpp>
#include <suq/suites.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace suq;

namespace {

// thrown for bad command-line input -> exit 2
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// thrown when a requested check fails -> exit 1
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- shared option state ---------------------------------------------------

struct Options {
    bool as_json = false;
    std::string q_text = "1/2";
    long bound = 3;

    Rational q0() const {
        std::string t = q_text;
        Integer num, den = 1;
        try {
            auto slash = t.find('/');
            num = Integer(t.substr(0, slash));
            if (slash != std::string::npos) den = Integer(t.substr(slash + 1));
        } catch (const std::exception&) {
            throw UsageFailure("--q must be a rational like 1/2");
        }
        if (den == 0) throw UsageFailure("--q has denominator zero");
        Rational r(num, den);
        if (!(r > 0 && r < 1))
            throw UsageFailure("--q must lie strictly between 0 and 1");
        return r;
    }
    double q0_double() const { return suites_rat_to_double(q0()); }

    static double suites_rat_to_double(const Rational& r) {
        return r.convert_to<double>();
    }
};

// ---- JSON renderings --------------------------------------------------------

json scalar_json(const Scalar& s) {
    return json{{"num", render_poly_in_q(s.num())},
                {"den", render_poly_in_q(s.den())}};
}

json element_json(const AlgebraElement& x) {
    json terms = json::array();
    for (auto& [idx, c] : x.terms()) {
        json t = scalar_json(c);
        t["k"] = idx.k;
        t["n"] = idx.n;
        t["m"] = idx.m;
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

json tensor_json(const TensorElement& t) {
    json terms = json::array();
    for (auto& [kk, c] : t.terms()) {
        json rec = scalar_json(c);
        rec["left"] = json{{"k", kk.first.k}, {"n", kk.first.n},
                           {"m", kk.first.m}};
        rec["right"] = json{{"k", kk.second.k}, {"n", kk.second.n},
                            {"m", kk.second.m}};
        terms.push_back(std::move(rec));
    }
    return json{{"terms", std::move(terms)}};
}

// weight maps as sorted pairs, ascending keys
json weights_json(const WeightFunction& w) {
    json pairs = json::array();
    for (auto& [k, m] : w.support()) pairs.push_back(json::array({k, m}));
    return pairs;
}

// decompositions as sorted pairs, descending keys (largest string first)
json decomposition_json(const std::map<long, long>& parts) {
    json pairs = json::array();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        pairs.push_back(json::array({it->first, it->second}));
    return pairs;
}

json corep_json(const Corep& u) {
    json basis = json::array();
    for (auto& lbl : u.basis_labels) basis.push_back(render_word(lbl));
    json entries = json::array();
    for (std::size_t i = 0; i < u.dim; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < u.dim; ++j)
            row.push_back(render_element(u.u.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"dim", u.dim}, {"basis", std::move(basis)},
                {"entries", std::move(entries)}};
}

json real_matrix_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

json int_matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- text renderings ---------------------------------------------------------

void print_corep(const Corep& u, bool as_json) {
    if (as_json) {
        std::cout << corep_json(u).dump(2) << "\n";
        return;
    }
    std::cout << "dim " << u.dim << "\n";
    if (!u.basis_labels.empty()) {
        std::cout << "basis:";
        for (auto& lbl : u.basis_labels) std::cout << " " << render_word(lbl);
        std::cout << "\n";
    }
    for (std::size_t i = 0; i < u.dim; ++i)
        for (std::size_t j = 0; j < u.dim; ++j)
            std::cout << "u[" << i << "][" << j
                      << "] = " << render_element(u.u.at(i, j)) << "\n";
}

void print_real_matrix(const std::string& name, const Eigen::MatrixXcd& m) {
    std::cout << name << ":\n";
    std::ostringstream os;
    os.precision(12);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << " ";
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << " " << m(i, j).real();
        os << "\n";
    }
    std::cout << os.str();
}

void print_int_matrix(const std::string& name, const IntMatrix& m) {
    std::cout << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << " ";
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << " " << m.at(i, j);
        std::cout << "\n";
    }
}

constexpr const char* kInfRelationNames[5] = {
    "q A2 A0 - q^-1 A0 A2 = A1", "q^2 A1 A0 - q^-2 A0 A1 = (1+q^2) A0",
    "q^2 A2 A1 - q^-2 A1 A2 = (1+q^2) A2", "-q A0^* = A2", "A1^* = A1"};

// ---- verb bodies --------------------------------------------------------------

long checked_n(std::int64_t n, long cap, const std::string& what) {
    if (n < 0) throw UsageFailure(what + " must be nonnegative");
    if (n > cap)
        throw UsageFailure(what + " is limited to " + std::to_string(cap) +
                           " on the command line");
    return static_cast<long>(n);
}

void do_element_out(const AlgebraElement& x, const Options& opt) {
    if (opt.as_json)
        std::cout << element_json(x).dump(2) << "\n";
    else
        std::cout << render_element(x) << "\n";
}

void do_corep_check(long n, const Options& opt) {
    Corep u = corep_build(n);
    CorepCheckReport rep = corep_check(u);
    std::vector<std::pair<std::string, bool>> rows{
        {"matrix coproduct identity", rep.corep_eq},
        {"antipode inverse identity", rep.antipode_inverse},
        {"counit identity", rep.counit_unit}};
    if (opt.as_json) {
        json checks = json::array();
        for (auto& [name, ok] : rows)
            checks.push_back(json{{"name", name}, {"ok", ok}});
        std::cout << json{{"dim", u.dim}, {"checks", std::move(checks)},
                          {"ok", rep.all()}}
                         .dump(2)
                  << "\n";
    } else {
        for (auto& [name, ok] : rows)
            std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    }
    for (auto& [name, ok] : rows)
        if (!ok) throw CheckFailure("first violated identity: " + name);
}

void do_inf_build(long n, const Options& opt) {
    InfSystem s = inf_build(n, opt.q0_double());
    InfVerifyReport rep = inf_verify(s, 1e-9);
    if (opt.as_json) {
        json res = json::array();
        for (int i = 0; i < 5; ++i)
            res.push_back(json{{"relation", kInfRelationNames[i]},
                               {"residual", rep.residuals[i]}});
        std::cout << json{{"dim", s.dim},
                          {"q0", s.q0},
                          {"convention", s.convention},
                          {"A0", real_matrix_json(s.a0)},
                          {"A1", real_matrix_json(s.a1)},
                          {"A2", real_matrix_json(s.a2)},
                          {"residuals", std::move(res)},
                          {"ok", rep.ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "dim " << s.dim << "  q0 " << s.q0 << "  convention "
                  << s.convention << "\n";
        print_real_matrix("A0", s.a0);
        print_real_matrix("A1", s.a1);
        print_real_matrix("A2", s.a2);
        for (int i = 0; i < 5; ++i)
            std::cout << (rep.residuals[i] <= rep.tol ? "ok   " : "FAIL ")
                      << kInfRelationNames[i]
                      << "  residual " << rep.residuals[i] << "\n";
    }
    for (int i = 0; i < 5; ++i)
        if (!(rep.residuals[i] <= rep.tol))
            throw CheckFailure(std::string("first violated identity: ") +
                               kInfRelationNames[i]);
}

void do_inf_verify(long maxn, const Options& opt) {
    std::set<double> grid{0.3, 0.5, 0.7, 0.9};
    grid.insert(opt.q0_double());
    bool all_ok = true;
    std::string first;
    std::ostringstream out;
    out.precision(6);
    out << "n,q0,r1,r2,r3,r4,r5,pass\n";
    for (long n = 0; n <= maxn; ++n)
        for (double q : grid) {
            InfVerifyReport rep = inf_verify(inf_build(n, q), 1e-9);
            out << n << "," << q;
            for (double r : rep.residuals) out << "," << r;
            out << "," << (rep.ok ? "yes" : "no") << "\n";
            if (!rep.ok && all_ok) {
                all_ok = false;
                first = "residuals at n=" + std::to_string(n);
            }
        }
    if (opt.as_json) {
        std::cout << json{{"csv", out.str()}, {"ok", all_ok}}.dump(2) << "\n";
    } else {
        std::cout << out.str();
    }
    if (!all_ok) throw CheckFailure("first violated identity: " + first);
}

void do_inf_equiv(long n, const Options& opt) {
    double qd = opt.q0_double();
    InfSystem canon = inf_build(n, qd);
    InfSystem imported = inf_import(amatrices(corep_build(n)), qd);
    auto t = inf_equivalent(canon, imported, 1e-7);
    if (!t)
        throw CheckFailure(
            "first violated identity: no invertible intertwiner between the "
            "canonical and exact-route systems");
    double resid = detail::relation_residual(canon, imported, *t);
    if (opt.as_json) {
        std::cout << json{{"equivalent", true},
                          {"residual", resid},
                          {"intertwiner", real_matrix_json(*t)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "equivalent: yes  residual " << resid << "\n";
        print_real_matrix("T", *t);
    }
}

void do_sl2(long n, const Options& opt) {
    SL2Rep r = sl2_build(n);
    SL2Report rep = sl2_verify(n);
    std::vector<std::pair<std::string, bool>> rows{
        {"[h,e] = 2e", rep.bracket_he},
        {"[f,h] = 2f", rep.bracket_fh},
        {"[f,e] = h", rep.bracket_fe},
        {"trace(h) = 0", rep.trace_h_zero},
        {"(fe) eigenvalue ladder", rep.fe_eigenvalues},
        {"(ef) eigenvalue ladder", rep.ef_eigenvalues},
        {"weight string multiplicity one", rep.weight_string},
        {"scalar commutant (irreducible)", rep.irreducible}};
    if (opt.as_json) {
        json checks = json::array();
        for (auto& [name, ok] : rows)
            checks.push_back(json{{"name", name}, {"ok", ok}});
        std::cout << json{{"n", n},
                          {"e", int_matrix_json(r.e)},
                          {"f", int_matrix_json(r.f)},
                          {"h", int_matrix_json(r.h)},
                          {"checks", std::move(checks)},
                          {"ok", rep.all()}}
                         .dump(2)
                  << "\n";
    } else {
        print_int_matrix("e", r.e);
        print_int_matrix("f", r.f);
        print_int_matrix("h", r.h);
        for (auto& [name, ok] : rows)
            std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    }
    for (auto& [name, ok] : rows)
        if (!ok) throw CheckFailure("first violated identity: " + name);
}

void do_verify(const std::string& suite, const Options& opt) {
    bool known = suite == "all";
    for (auto& n : suite_names()) known = known || suite == n;
    if (!known) throw UsageFailure("unknown suite: " + suite);

    std::vector<SuiteResult> results = run_suites(suite, opt.q0(), opt.bound);
    bool ok = true;
    std::string first;
    for (auto& r : results) {
        if (!r.ok() && ok) {
            ok = false;
            first = r.first_failure();
        }
    }
    if (opt.as_json) {
        json suites = json::array();
        for (auto& r : results) {
            json checks = json::array();
            for (auto& c : r.checks)
                checks.push_back(json{{"name", c.name}, {"ok", c.ok}});
            suites.push_back(json{{"suite", r.suite},
                                  {"checks", std::move(checks)},
                                  {"ok", r.ok()}});
        }
        json doc{{"suites", std::move(suites)}, {"ok", ok}};
        if (!ok) doc["first_violated"] = first;
        std::cout << doc.dump(2) << "\n";
    } else {
        for (auto& r : results) {
            for (auto& c : r.checks)
                std::cout << (c.ok ? "ok   " : "FAIL ") << r.suite << ": "
                          << c.name << "\n";
            std::cout << "suite " << r.suite << ": "
                      << (r.ok() ? "pass" : "fail") << "\n";
        }
    }
    if (!ok) throw CheckFailure("first violated identity: " + first);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computational kernel for the q-deformed 2x2 special "
                 "unitary coordinate algebra"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");
    app.add_option("--q", opt.q_text,
                   "rational evaluation point in (0,1), default 1/2");
    app.add_option("--bound", opt.bound,
                   "truncation bound for functional equality, default 3");

    std::string expr1, expr2, func_name, side = "left", suite, weight_text;
    std::int64_t arg_n = 0, arg_m = 0, arg_maxn = 6;
    std::vector<std::int64_t> weight_ns;

    auto* norm = app.add_subcommand("normalize", "print the normal form");
    norm->add_option("expr", expr1)->required();
    norm->fallthrough();
    norm->callback([&] { do_element_out(parse_expr(expr1), opt); });

    auto* mul = app.add_subcommand("mul", "multiply two expressions");
    mul->add_option("left", expr1)->required();
    mul->add_option("right", expr2)->required();
    mul->fallthrough();
    mul->callback(
        [&] { do_element_out(parse_expr(expr1) * parse_expr(expr2), opt); });

    auto* del = app.add_subcommand("delta", "comultiplication of an expression");
    del->add_option("expr", expr1)->required();
    del->fallthrough();
    del->callback([&] {
        TensorElement t = delta(parse_expr(expr1));
        if (opt.as_json)
            std::cout << tensor_json(t).dump(2) << "\n";
        else
            std::cout << render_tensor(t) << "\n";
    });

    auto* cou = app.add_subcommand("counit", "counit of an expression");
    cou->add_option("expr", expr1)->required();
    cou->fallthrough();
    cou->callback([&] {
        Scalar s = counit(parse_expr(expr1));
        if (opt.as_json)
            std::cout << scalar_json(s).dump(2) << "\n";
        else
            std::cout << render_scalar(s) << "\n";
    });

    auto* anti = app.add_subcommand("antipode", "antipode of an expression");
    anti->add_option("expr", expr1)->required();
    anti->fallthrough();
    anti->callback([&] { do_element_out(antipode(parse_expr(expr1)), opt); });

    auto* conv = app.add_subcommand(
        "conv", "convolve a named functional with an expression");
    conv->add_option("functional", func_name,
                     "eps, f0, f1, f2, chi0, chi1 or chi2")
        ->required();
    conv->add_option("expr", expr1)->required();
    conv->add_option("--side", side, "left or right (default left)");
    conv->fallthrough();
    conv->callback([&] {
        Functional f = [&] {
            try {
                return suq::detail::functional_by_name(func_name);
            } catch (const std::invalid_argument&) {
                throw UsageFailure("unknown functional: " + func_name);
            }
        }();
        AlgebraElement x = parse_expr(expr1);
        if (side == "left")
            do_element_out(conv_left(f, x), opt);
        else if (side == "right")
            do_element_out(conv_right(x, f), opt);
        else
            throw UsageFailure("--side must be left or right");
    });

    auto* functional =
        app.add_subcommand("functional", "operations on named functionals");
    functional->require_subcommand(1);
    functional->fallthrough();
    auto* feval = functional->add_subcommand(
        "eval", "evaluate a named functional on an expression");
    feval->add_option("functional", func_name)->required();
    feval->add_option("expr", expr1)->required();
    feval->fallthrough();
    feval->callback([&] {
        Functional f = [&] {
            try {
                return suq::detail::functional_by_name(func_name);
            } catch (const std::invalid_argument&) {
                throw UsageFailure("unknown functional: " + func_name);
            }
        }();
        Scalar s = f(parse_expr(expr1));
        if (opt.as_json)
            std::cout << scalar_json(s).dump(2) << "\n";
        else
            std::cout << render_scalar(s) << "\n";
    });

    auto* corep = app.add_subcommand("corep", "matrix corepresentations");
    corep->require_subcommand(1);
    corep->fallthrough();
    auto* cbuild = corep->add_subcommand("build", "build the n-th matrix");
    cbuild->add_option("n", arg_n)->required();
    cbuild->fallthrough();
    cbuild->callback([&] {
        print_corep(corep_build(checked_n(arg_n, 10, "n")), opt.as_json);
    });
    auto* ccheck =
        corep->add_subcommand("check", "verify the n-th matrix's identities");
    ccheck->add_option("n", arg_n)->required();
    ccheck->fallthrough();
    ccheck->callback([&] { do_corep_check(checked_n(arg_n, 10, "n"), opt); });
    auto* ctensor = corep->add_subcommand("tensor", "tensor of two matrices");
    ctensor->add_option("m", arg_m)->required();
    ctensor->add_option("n", arg_n)->required();
    ctensor->fallthrough();
    ctensor->callback([&] {
        print_corep(corep_tensor(corep_build(checked_n(arg_m, 6, "m")),
                                 corep_build(checked_n(arg_n, 6, "n"))),
                    opt.as_json);
    });

    auto* wts = app.add_subcommand(
        "weights", "circle weight function of a tensor of matrices");
    wts->add_option("n", weight_ns, "one or more matrix indices")
        ->required()
        ->expected(-1);
    wts->fallthrough();
    wts->callback([&] {
        WeightFunction w;
        bool started = false;
        for (auto raw : weight_ns) {
            long n = checked_n(raw, 10, "n");
            WeightFunction wn = corep_weights(corep_build(n));
            w = started ? weight_tensor(w, wn) : wn;
            started = true;
        }
        if (opt.as_json)
            std::cout << weights_json(w).dump(2) << "\n";
        else
            std::cout << render_weights(w) << "\n";
    });

    auto* dec = app.add_subcommand(
        "decompose", "decompose a weight map into irreducible strings");
    dec->add_option("weights", weight_text, "JSON-like map {k:mult,...}")
        ->required();
    dec->fallthrough();
    dec->callback([&] {
        WeightFunction w = [&] {
            try {
                return parse_weights(weight_text);
            } catch (const std::invalid_argument& e) {
                throw UsageFailure(e.what());
            }
        }();
        std::map<long, long> parts = [&] {
            try {
                return weight_decompose(w);
            } catch (const std::invalid_argument& e) {
                throw CheckFailure(e.what());
            }
        }();
        if (opt.as_json)
            std::cout << decomposition_json(parts).dump(2) << "\n";
        else
            std::cout << render_decomposition(parts) << "\n";
    });

    auto* inf = app.add_subcommand("inf", "numeric ladder systems");
    inf->require_subcommand(1);
    inf->fallthrough();
    auto* ibuild = inf->add_subcommand("build", "canonical system of size n+1");
    ibuild->add_option("n", arg_n)->required();
    ibuild->fallthrough();
    ibuild->callback([&] { do_inf_build(checked_n(arg_n, 10, "n"), opt); });
    auto* iverify =
        inf->add_subcommand("verify", "CSV residual report across a q-grid");
    iverify->add_option("--max", arg_maxn, "largest n (default 6)");
    iverify->fallthrough();
    iverify->callback(
        [&] { do_inf_verify(checked_n(arg_maxn, 10, "--max"), opt); });
    auto* iequiv = inf->add_subcommand(
        "equiv", "equivalence of the canonical and exact-route systems");
    iequiv->add_option("n", arg_n)->required();
    iequiv->fallthrough();
    iequiv->callback([&] { do_inf_equiv(checked_n(arg_n, 6, "n"), opt); });

    auto* sl2 = app.add_subcommand(
        "sl2", "classical integer triple on the (n+1)-dimensional string");
    sl2->add_option("n", arg_n)->required();
    sl2->fallthrough();
    sl2->callback([&] { do_sl2(checked_n(arg_n, 12, "n"), opt); });

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("suite", suite,
                    "relations, hopf, conprop, derivation, corep, inf, sl2 "
                    "or all")
        ->required();
    ver->fallthrough();
    ver->callback([&] { do_verify(suite, opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CheckFailure& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
