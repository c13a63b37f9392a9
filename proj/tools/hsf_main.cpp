// hsf: exact computer algebra for hyperelliptic sigma functions, heat
// operators in nonholonomic frames, and Adler-Moser polynomials.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsf/ratlimit.hpp"
#include "hsf/render.hpp"
#include "hsf/sigma.hpp"
#include "hsf/symfun.hpp"

using namespace hsf;

namespace {

struct OutputTarget {
    std::string path;  // empty: stdout

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload << "\n";
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
        f << payload << "\n";
        if (!f) throw std::invalid_argument("write to '" + path + "' failed");
    }
};

struct SuiteResult {
    std::string name;
    CheckReport report;
};

void run_or_capture(std::vector<SuiteResult>& out, const std::string& name,
                    const std::function<CheckReport()>& fn) {
    CheckReport rep;
    try {
        rep = fn();
    } catch (const std::exception& e) {
        rep.fail(std::string("exception: ") + e.what());
    }
    out.push_back({name, rep});
}

CheckReport suite_rational(int max_g) {
    CheckReport rep;
    for (int g = 1; g <= max_g; ++g) {
        auto a = solve_m(g, SolveMethod::Nullspace);
        auto b = solve_m(g, SolveMethod::Induction);
        if (!(a.poly == b.poly)) rep.fail("solver methods disagree at g=" + std::to_string(g));
        rep.merge(verify_annihilation(a, 2 * g - 1));
    }
    rep.merge(adler_moser_recursion_check(max_g));
    return rep;
}

CheckReport suite_heat(int min_g, int max_g, int weight) {
    CheckReport rep;
    for (int g = min_g; g <= max_g; ++g) {
        GenusContext ctx(g);
        TruncatedSeries s = sigma_series(g, weight);
        if (!(graded_component(s.poly, 0) == solve_m(g).poly))
            rep.fail("stratum 0 differs from the rational limit at g=" + std::to_string(g));
        for (int k = 0; k <= 2 * g - 1; ++k) {
            GradedPolynomial r = apply(build_Q(ctx, k), s.poly);
            for (int w : lambda_weights_present(r)) {
                if (w <= weight && !graded_component(r, w).is_zero()) {
                    rep.fail("heat residual Q_" + std::to_string(2 * k) + " at g=" + std::to_string(g) +
                             ", stratum " + std::to_string(w));
                    break;
                }
            }
        }
    }
    return rep;
}

CheckReport suite_shapes(int max_g) {
    CheckReport rep;
    for (int g = 1; g <= max_g; ++g) {
        GenusContext ctx(g);
        for (int k = 1; k <= 2 * g - 1; ++k) {
            DifferentialOperator h = h_part_of_Q(ctx, k);
            CheckReport r = h_shape_check(h, ctx, k);
            if (!r.ok)
                for (const auto& f : r.failures)
                    rep.fail("shape at g=" + std::to_string(g) + " k=" + std::to_string(k) + ": " + f);
        }
    }
    return rep;
}

CheckReport suite_lbracket(int max_g) {
    CheckReport rep;
    for (int g = 2; g <= max_g; ++g) {
        GenusContext ctx(g);
        for (int k = 1; k <= 2 * g - 2; ++k) rep.merge(l_bracket_check(ctx, k));
    }
    return rep;
}

CheckReport suite_kdv(int min_g, int max_g, int weight) {
    CheckReport rep;
    for (int g = std::max(2, min_g); g <= max_g; ++g) rep.merge(kdv_check_rational(g));
    for (int g = std::max(2, min_g); g <= std::min(3, max_g); ++g) rep.merge(kdv_check_series(g, weight));
    return rep;
}

CheckReport suite_dynsys(int min_g, int max_g, int weight) {
    CheckReport rep;
    for (int g = std::max(2, min_g); g <= std::min(3, max_g); ++g) {
        rep.merge(dyn_consistency_check(g, DynFlow::S0, weight));
        rep.merge(dyn_consistency_check(g, DynFlow::S1, weight));
    }
    if (min_g <= 3 && 3 <= max_g) rep.merge(dyn_consistency_check(3, DynFlow::S2, weight));
    return rep;
}

CheckReport suite_addendum(int max_g) {
    CheckReport rep;
    GradedPolynomial one = GradedPolynomial::constant(0, Rational(1));
    GradedPolynomial p1 = GradedPolynomial::from_var(0, p_var(1));
    GradedPolynomial p3 = GradedPolynomial::from_var(0, p_var(3));
    GradedPolynomial p5 = GradedPolynomial::from_var(0, p_var(5));

    if (!(schur_poly(2, SymBasis::P).poly == Rational(1, 3) * (p1.pow(3) - p3)))
        rep.fail("ShW_2 differs from the printed form");
    auto shw3 = Rational(1, 45) * (p1.pow(6) - Rational(5) * (p1.pow(3) * p3) + Rational(9) * (p1 * p5) -
                                   Rational(5) * p3.pow(2));
    if (!(schur_poly(3, SymBasis::P).poly == shw3)) rep.fail("ShW_3 differs from the printed form");

    for (int g = 2; g <= 3; ++g) {
        std::vector<GradedPolynomial> chain;
        for (int j = 1; j <= g; ++j) chain.push_back(e_in_p(2 * j - 1));
        if (!(wronskian(chain, p_var(1)) == schur_poly(g, SymBasis::P).poly))
            rep.fail("Wronskian differs from ShW at g=" + std::to_string(g));
    }

    std::vector<GradedPolynomial> seq = {one, p1};
    for (int g = 2; g <= std::max(max_g, 5); ++g) seq.push_back(schur_poly(g, SymBasis::P).poly);
    rep.merge(burchnall_chaundy_check(seq));
    try {
        adler_moser_from_bc(seq);
    } catch (const std::exception& e) {
        rep.fail(e.what());
    }

    const long mu_table[] = {1, 1, 3, 45, 4725, 4465125};
    for (int k = 0; k <= 5; ++k)
        if (!(mu_const(k) == Rational(mu_table[k]))) rep.fail("mu table mismatch at k=" + std::to_string(k));
    const long alpha_table[] = {-3, 45, -1575, 99225};
    for (int i = 2; i <= 5; ++i)
        if (!(alpha_const(2 * i - 1) == Rational(alpha_table[i - 2])))
            rep.fail("alpha table mismatch at i=" + std::to_string(i));
    if (!(tau_from_p(2) == Rational(-1))) rep.fail("tau_2 != -p_3");
    if (!(tau_from_p(3) == Rational(9))) rep.fail("tau_3 != 9 p_5");

    for (int g = 2; g <= max_g; ++g) {
        try {
            ShwMatch match = match_shw_to_z(g);  // verifies mu_g ShW_g(p(z)) = m_g internally
            GenusContext ctx(g);
            if (!(match.p_subst.at(3) == Rational(3) * z_poly(ctx, 3))) rep.fail("p_3 != 3 z3");
            if (g >= 3 && !(match.p_subst.at(5) == Rational(5) * z_poly(ctx, 5))) rep.fail("p_5 != 5 z5");
        } catch (const std::exception& e) {
            rep.fail(std::string("match at g=") + std::to_string(g) + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "hsf: exact computer algebra for hyperelliptic sigma functions, heat operators and "
        "Adler-Moser polynomials"};
    app.require_subcommand(1);

    std::string format = "text";
    OutputTarget out;
    app.add_option("--format", format, "output format: text, json, latex")->capture_default_str();
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    auto* gen = app.add_subcommand("gen-op", "emit one operator of a family");
    gen->fallthrough();
    int gen_genus = 1, gen_k = 0;
    std::string gen_family;
    gen->add_option("--genus", gen_genus, "curve genus")->required();
    gen->add_option("--family", gen_family, "operator family: L, H, Q, A")->required();
    gen->add_option("--k", gen_k, "family index k (the operator subscript is 2k)")->required();

    auto* solve = app.add_subcommand("solve-rational", "rational-limit sigma polynomial m_g");
    solve->fallthrough();
    int solve_genus = 1;
    std::string solve_method = "nullspace";
    solve->add_option("--genus", solve_genus, "curve genus")->required();
    solve->add_option("--method", solve_method, "nullspace or induction")->capture_default_str();

    auto* series = app.add_subcommand("sigma-series", "truncated sigma series");
    series->fallthrough();
    int series_genus = 1, series_weight = 6;
    series->add_option("--genus", series_genus, "curve genus")->required();
    series->add_option("--max-lambda-weight", series_weight, "lambda-weight truncation bound")
        ->capture_default_str();

    auto* am = app.add_subcommand("adler-moser", "Adler-Moser polynomial theta_k in power sums");
    am->fallthrough();
    int am_k = 2;
    am->add_option("--k", am_k, "sequence index")->required();

    auto* shw = app.add_subcommand("shw", "Schur / Schur-Weierstrass polynomial");
    shw->fallthrough();
    int shw_genus = 2;
    std::string shw_basis = "p";
    shw->add_option("--genus", shw_genus, "genus")->required();
    shw->add_option("--basis", shw_basis, "basis: e or p")->capture_default_str();

    auto* cov = app.add_subcommand("change-of-vars", "tanh (tau -> tau*) or pz (p -> z) change");
    cov->fallthrough();
    std::string cov_which;
    int cov_genus = 2;
    cov->add_option("--which", cov_which, "tanh or pz")->required();
    cov->add_option("--genus", cov_genus, "genus")->required();

    auto* table = app.add_subcommand("emit-table", "constant tables: mu, alpha, tau");
    table->fallthrough();
    std::string table_name;
    int table_maxk = 4;
    table->add_option("--table", table_name, "mu, alpha or tau")->required();
    table->add_option("--max-k", table_maxk, "largest index")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite (exit 1 on failure)");
    verify->fallthrough();
    std::string suite;
    int v_genus = 0, v_maxg = 0, v_weight = -1, v_maxk = 6;
    verify
        ->add_option("--suite", suite,
                     "rational, witt, heat, lemma21, lbracket, kdv, dynsys, addendum, all")
        ->required();
    verify->add_option("--genus", v_genus, "genus for genus-pinned suites");
    verify->add_option("--max-genus", v_maxg, "sweep bound for genus sweeps");
    verify->add_option("--max-lambda-weight", v_weight, "lambda-weight bound");
    verify->add_option("--max-k", v_maxk, "Witt index bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(format);

        if (*gen) {
            GenusContext ctx(gen_genus);
            DifferentialOperator op(gen_genus);
            if (gen_family == "L")
                op = build_L(ctx, gen_k);
            else if (gen_family == "H")
                op = build_H(ctx, gen_k);
            else if (gen_family == "Q")
                op = build_Q(ctx, gen_k);
            else if (gen_family == "A")
                op = build_A(gen_k, gen_genus);
            else
                throw std::invalid_argument("unknown family '" + gen_family + "'");
            out.write(render(op, fmt));
            return 0;
        }

        if (*solve) {
            SolveMethod method;
            if (solve_method == "nullspace")
                method = SolveMethod::Nullspace;
            else if (solve_method == "induction")
                method = SolveMethod::Induction;
            else
                throw std::invalid_argument("unknown method '" + solve_method + "'");
            out.write(render(solve_m(solve_genus, method).poly, fmt));
            return 0;
        }

        if (*series) {
            out.write(render(sigma_series(series_genus, series_weight).poly, fmt));
            return 0;
        }

        if (*am) {
            if (am_k < 0) throw std::invalid_argument("k must be >= 0");
            GradedPolynomial theta = mu_const(am_k) * schur_poly(am_k, SymBasis::P).poly;
            out.write(render(theta, fmt));
            return 0;
        }

        if (*shw) {
            SymBasis basis;
            if (shw_basis == "e")
                basis = SymBasis::E;
            else if (shw_basis == "p")
                basis = SymBasis::P;
            else
                throw std::invalid_argument("unknown basis '" + shw_basis + "'");
            out.write(render(schur_poly(shw_genus, basis).poly, fmt));
            return 0;
        }

        if (*cov) {
            std::ostringstream os;
            if (cov_which == "tanh") {
                if (cov_genus < 2) throw std::invalid_argument("tanh change needs genus >= 2");
                TanhChange change = tanh_change_of_vars(cov_genus, 2 * cov_genus - 1);
                if (fmt == Format::Json) {
                    nlohmann::json j;
                    j["which"] = "tanh";
                    j["order"] = change.order;
                    j["tau_star"] = nlohmann::json::array();
                    for (const auto& [i, poly] : change.tau_star)
                        j["tau_star"].push_back({{"i", i}, {"poly", to_json(poly)}});
                    os << j.dump();
                } else {
                    bool first = true;
                    for (const auto& [i, poly] : change.tau_star) {
                        if (!first) os << "\n";
                        first = false;
                        if (fmt == Format::Latex)
                            os << "\\tau_" << i << "^{*} = " << to_latex(poly);
                        else
                            os << "tau" << i << "* = " << to_text(poly);
                    }
                }
            } else if (cov_which == "pz") {
                ShwMatch match = match_shw_to_z(cov_genus);
                if (fmt == Format::Json) {
                    nlohmann::json j;
                    j["which"] = "pz";
                    j["genus"] = match.g;
                    j["p"] = nlohmann::json::array();
                    for (const auto& [idx, poly] : match.p_subst)
                        j["p"].push_back({{"index", idx}, {"poly", to_json(poly)}});
                    os << j.dump();
                } else {
                    bool first = true;
                    for (const auto& [idx, poly] : match.p_subst) {
                        if (!first) os << "\n";
                        first = false;
                        if (fmt == Format::Latex)
                            os << "p_{" << idx << "} = " << to_latex(poly);
                        else
                            os << "p" << idx << " = " << to_text(poly);
                    }
                }
            } else {
                throw std::invalid_argument("unknown change '" + cov_which + "'");
            }
            out.write(os.str());
            return 0;
        }

        if (*table) {
            std::vector<Rational> values;
            const AdlerMoserConstants consts = adler_moser_constants(table_maxk);
            if (table_name == "mu") {
                for (const auto& [k, v] : consts.mu) values.push_back(v);
            } else if (table_name == "alpha") {
                for (const auto& [i, v] : consts.alpha) values.push_back(v);
            } else if (table_name == "tau") {
                for (int k = 2; k <= table_maxk; ++k) values.push_back(tau_from_p(k));
            } else {
                throw std::invalid_argument("unknown table '" + table_name + "'");
            }
            std::ostringstream os;
            if (fmt == Format::Json) {
                nlohmann::json vals = nlohmann::json::array();
                for (const auto& v : values) vals.push_back({v.num().get_str(), v.den().get_str()});
                os << nlohmann::json({{"table", table_name}, {"values", vals}}).dump();
            } else {
                bool first = true;
                for (const auto& v : values) {
                    if (!first) os << " ";
                    first = false;
                    os << v.str();
                }
            }
            out.write(os.str());
            return 0;
        }

        if (*verify) {
            std::vector<SuiteResult> results;
            const int def_g = 4, def_w = 6;
            auto want = [&](const std::string& s) { return suite == s || suite == "all"; };
            if (want("rational"))
                run_or_capture(results, "rational", [&] { return suite_rational(v_maxg ? v_maxg : def_g); });
            if (want("witt"))
                run_or_capture(results, "witt",
                               [&] { return witt_check(v_maxk, v_genus ? v_genus : def_g); });
            if (want("heat"))
                run_or_capture(results, "heat", [&] {
                    const int hi = v_genus ? v_genus : (v_maxg ? v_maxg : 3);
                    return suite_heat(v_genus ? v_genus : 1, hi, v_weight >= 0 ? v_weight : def_w);
                });
            if (want("lemma21"))
                run_or_capture(results, "lemma21", [&] { return suite_shapes(v_maxg ? v_maxg : def_g); });
            if (want("lbracket"))
                run_or_capture(results, "lbracket", [&] { return suite_lbracket(v_maxg ? v_maxg : def_g); });
            if (want("kdv"))
                run_or_capture(results, "kdv", [&] {
                    const int hi = v_genus ? v_genus : (v_maxg ? v_maxg : def_g);
                    return suite_kdv(v_genus ? v_genus : 2, hi, v_weight >= 0 ? v_weight : def_w);
                });
            if (want("dynsys"))
                run_or_capture(results, "dynsys", [&] {
                    const int hi = v_genus ? v_genus : 3;
                    return suite_dynsys(v_genus ? v_genus : 2, hi, v_weight >= 0 ? v_weight : 4);
                });
            if (want("addendum"))
                run_or_capture(results, "addendum", [&] { return suite_addendum(v_maxg ? v_maxg : def_g); });
            if (results.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");

            bool all_ok = true;
            std::ostringstream os;
            bool first = true;
            for (const auto& r : results) {
                nlohmann::json j;
                j["suite"] = r.name;
                j["ok"] = r.report.ok;
                j["failures"] = r.report.failures;
                if (!first) os << "\n";
                first = false;
                os << j.dump();
                if (!r.report.ok) all_ok = false;
            }
            out.write(os.str());
            return all_ok ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
