#include "hsf/sigma.hpp"

#include <sstream>
#include <stdexcept>

#include "hsf/linear.hpp"
#include "hsf/ratlimit.hpp"

namespace hsf {

namespace {

void enumerate_lambda(const GenusContext& ctx, std::size_t pos, int remaining, Monomial acc,
                      std::vector<Monomial>& out) {
    const auto& ls = ctx.lambda_vars();
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    if (pos == ls.size()) return;
    const int w = ls[pos].weight();
    for (int e = 0; e * w <= remaining; ++e)
        enumerate_lambda(ctx, pos + 1, remaining - e * w, acc.times_var(ls[pos], e), out);
}

/// All monomials of total weight -g(g+1)/2 whose lambda part has weight
/// exactly w: (lambda monomials of weight w) x (z monomials of weighted
/// degree g(g+1)/2 + w).
std::vector<Monomial> stratum_candidates(const GenusContext& ctx, int w) {
    std::vector<Monomial> lams;
    enumerate_lambda(ctx, 0, w, Monomial(), lams);
    std::vector<Monomial> zs = stratum_monomials(ctx, ctx.g() * (ctx.g() + 1) / 2 + w);
    std::vector<Monomial> out;
    out.reserve(lams.size() * zs.size());
    for (const auto& lm : lams)
        for (const auto& zm : zs) out.push_back(lm.times(zm));
    return out;
}

}  // namespace

TruncatedSeries sigma_series(int g, int max_lambda_weight) {
    if (g < 1) throw std::invalid_argument("sigma_series: g must be >= 1");
    if (max_lambda_weight < 0) throw std::invalid_argument("sigma_series: negative weight bound");
    GenusContext ctx(g);
    GradedPolynomial sigma = solve_m(g).poly;
    const std::vector<DifferentialOperator> q = build_Q_family(ctx, 2 * g - 1);

    for (int w = 1; w <= max_lambda_weight; ++w) {
        const std::vector<Monomial> candidates = stratum_candidates(ctx, w);
        if (candidates.empty()) continue;

        // Unknown stratum x over the candidates; rows are the stratum-w
        // components of Q_{2k}(sigma + x), collected per output monomial.
        std::map<Monomial, std::size_t> row_of;
        RationalMatrix a;
        std::vector<Rational> b;
        auto row_for = [&](const Monomial& m) {
            auto [it, fresh] = row_of.try_emplace(m, a.size());
            if (fresh) {
                a.push_back(std::vector<Rational>(candidates.size(), Rational(0)));
                b.push_back(Rational(0));
            }
            return it->second;
        };

        for (const auto& op : q) {
            GradedPolynomial known = graded_component(apply(op, sigma), w);
            for (const auto& [m, c] : known.terms()) b[row_for(m)] -= c;
            for (std::size_t col = 0; col < candidates.size(); ++col) {
                GradedPolynomial img = graded_component(
                    apply(op, GradedPolynomial::from_monomial(g, candidates[col], Rational(1))), w);
                for (const auto& [m, c] : img.terms()) a[row_for(m)][col] += c;
            }
        }

        LinearSolveResult sol = solve_linear(a, b);
        if (!sol.consistent || !sol.unique) {
            std::ostringstream os;
            os << "sigma_series: stratum " << w << " at g=" << g
               << (sol.consistent ? " is underdetermined" : " is inconsistent");
            throw std::runtime_error(os.str());
        }
        for (std::size_t col = 0; col < candidates.size(); ++col)
            sigma.add_term(candidates[col], sol.solution[col]);
    }
    return {g, max_lambda_weight, sigma};
}

SigmaRatio ratio_add(const GradedPolynomial& sigma, const SigmaRatio& a, const SigmaRatio& b) {
    const int p = std::max(a.pow, b.pow);
    return {a.num * sigma.pow(p - a.pow) + b.num * sigma.pow(p - b.pow), p};
}

SigmaRatio ratio_sub(const GradedPolynomial& sigma, const SigmaRatio& a, const SigmaRatio& b) {
    const int p = std::max(a.pow, b.pow);
    return {a.num * sigma.pow(p - a.pow) - b.num * sigma.pow(p - b.pow), p};
}

SigmaRatio ratio_mul(const SigmaRatio& a, const SigmaRatio& b) { return {a.num * b.num, a.pow + b.pow}; }

SigmaRatio ratio_scale(SigmaRatio a, const Rational& c) {
    a.num *= c;
    return a;
}

SigmaRatio ratio_diff(const GradedPolynomial& sigma, const SigmaRatio& a, VarId v) {
    return {partial_derivative(a.num, v) * sigma - Rational(a.pow) * (a.num * partial_derivative(sigma, v)),
            a.pow + 1};
}

bool ratio_zero(const SigmaRatio& a, std::optional<int> bound) {
    if (!bound) return a.num.is_zero();
    for (int w : lambda_weights_present(a.num))
        if (w <= *bound && !graded_component(a.num, w).is_zero()) return false;
    return true;
}

SigmaRatio zeta(const TruncatedSeries& series, int k) {
    GenusContext ctx(series.g);
    if (!ctx.valid_z_index(k)) throw std::invalid_argument("zeta: index out of range");
    return {partial_derivative(series.poly, z_var(k)), 1};
}

SigmaRatio wp(const TruncatedSeries& series, const std::vector<int>& indices) {
    if (indices.size() < 2) throw std::invalid_argument("wp: need at least two indices");
    GenusContext ctx(series.g);
    for (int k : indices)
        if (!ctx.valid_z_index(k)) throw std::invalid_argument("wp: index out of range");
    SigmaRatio r = zeta(series, indices[0]);
    for (std::size_t i = 1; i < indices.size(); ++i)
        r = ratio_diff(series.poly, r, z_var(indices[i]));
    return ratio_scale(r, Rational(-1));
}

namespace {

CheckReport kdv_residual(const TruncatedSeries& series, std::optional<int> bound) {
    CheckReport rep;
    const GradedPolynomial& sigma = series.poly;
    const VarId z1 = z_var(1);
    const VarId z3v = z_var(3);  // derivative by z3 is the zero map at g = 1

    SigmaRatio p = ratio_scale(ratio_diff(sigma, SigmaRatio{partial_derivative(sigma, z1), 1}, z1),
                               Rational(-1));
    SigmaRatio lhs = ratio_scale(ratio_diff(sigma, p, z3v), Rational(4));
    SigmaRatio d2p = ratio_diff(sigma, ratio_diff(sigma, p, z1), z1);
    SigmaRatio inner = ratio_sub(sigma, d2p, ratio_scale(ratio_mul(p, p), Rational(6)));
    SigmaRatio rhs = ratio_diff(sigma, inner, z1);
    SigmaRatio residual = ratio_sub(sigma, lhs, rhs);
    if (!ratio_zero(residual, bound)) {
        std::ostringstream os;
        os << "KdV residual nonzero at g=" << series.g;
        if (bound) os << " within lambda weight " << *bound;
        rep.fail(os.str());
    }
    return rep;
}

}  // namespace

CheckReport kdv_check_rational(int g) {
    TruncatedSeries rational{g, 0, solve_m(g).poly};
    return kdv_residual(rational, std::nullopt);
}

CheckReport kdv_check_series(int g, int max_lambda_weight) {
    return kdv_residual(sigma_series(g, max_lambda_weight), max_lambda_weight);
}

ScriptL build_script_L(const GenusContext& ctx, int k) {
    const int g = ctx.g();
    if (k < 0 || k > 2) throw std::invalid_argument("build_script_L: k must be 0, 1 or 2");
    ScriptL op{build_L(ctx, k), {}};

    auto subtract_z_term = [&](const GradedPolynomial& coeff, int b) {
        op.field -= DifferentialOperator::from_term(coeff, DerivMonomial::var(z_var(b)));
    };

    if (k == 0) {
        for (int s = 1; s <= g; ++s)
            subtract_z_term(Rational(2 * s - 1) * z_poly(ctx, 2 * s - 1), 2 * s - 1);
        return op;
    }
    if (k == 1) {
        op.zeta_terms = {{1, 1}};
        for (int s = 1; s <= g - 1; ++s)
            subtract_z_term(Rational(2 * s - 1) * z_poly(ctx, 2 * s - 1), 2 * s + 1);
        for (int s = 1; s <= g - 1; ++s)
            subtract_z_term(Rational(-4 * (g - s), 2 * g + 1) * (lambda_symbol(ctx, 4) * z_poly(ctx, 2 * s + 1)),
                            2 * s - 1);
        return op;
    }
    op.zeta_terms = {{3, 1}, {1, 3}};
    for (int s = 1; s <= g - 2; ++s)
        subtract_z_term(Rational(2 * s - 1) * z_poly(ctx, 2 * s - 1), 2 * s + 3);
    for (int s = 1; s <= g - 1; ++s)
        subtract_z_term(Rational(2 * s - 1) * (lambda_symbol(ctx, 4) * z_poly(ctx, 2 * s + 1)), 2 * s + 1);
    for (int s = 1; s <= g - 1; ++s)
        subtract_z_term(Rational(-6 * (g - s), 2 * g + 1) * (lambda_symbol(ctx, 6) * z_poly(ctx, 2 * s + 1)),
                        2 * s - 1);
    return op;
}

SigmaRatio apply_script_L(const ScriptL& op, const TruncatedSeries& series, const SigmaRatio& f) {
    const GradedPolynomial& sigma = series.poly;
    SigmaRatio acc{GradedPolynomial::zero(series.g), 0};
    for (const auto& [d, coeff] : op.field.terms()) {
        if (d.total_degree() != 1)
            throw std::logic_error("apply_script_L: field part must be first order");
        const VarId v = d.factors()[0].first;
        acc = ratio_add(sigma, acc, ratio_mul(SigmaRatio{coeff, 0}, ratio_diff(sigma, f, v)));
    }
    for (const auto& [a, b] : op.zeta_terms) {
        SigmaRatio za{partial_derivative(sigma, z_var(a)), 1};
        acc = ratio_sub(sigma, acc, ratio_mul(za, ratio_diff(sigma, f, z_var(b))));
    }
    return acc;
}

namespace {

GradedPolynomial xp(int genus, int i, int j, int e = 1) {
    return GradedPolynomial::from_var(genus, x_var(i, j), e);
}

/// The genus-3 tau_2 flow and the lambda_4 identity it relies on.
std::vector<std::pair<std::pair<int, int>, GradedPolynomial>> s2_table(const GenusContext& ctx) {
    const int g = ctx.g();
    GradedPolynomial l4 = lambda_symbol(ctx, 4);
    std::vector<std::pair<std::pair<int, int>, GradedPolynomial>> rhs;
    rhs.push_back({{1, 1}, Rational(12, 7) * l4 + Rational(2) * xp(g, 1, 1, 2) + Rational(4) * xp(g, 1, 3)});
    rhs.push_back({{2, 1}, Rational(3) * (xp(g, 1, 1) * xp(g, 2, 1)) + Rational(5) * xp(g, 2, 3)});
    rhs.push_back({{3, 1}, Rational(3) * xp(g, 2, 1, 2) + Rational(2) * (xp(g, 1, 1) * xp(g, 3, 1)) +
                               Rational(6) * xp(g, 3, 3)});
    rhs.push_back({{1, 3}, Rational(-8, 7) * (l4 * xp(g, 1, 1)) + Rational(2) * (xp(g, 1, 1) * xp(g, 1, 3)) +
                               Rational(6) * xp(g, 1, 5)});
    rhs.push_back({{2, 3}, Rational(-8, 7) * (l4 * xp(g, 2, 1)) + Rational(3) * (xp(g, 2, 1) * xp(g, 1, 3)) +
                               Rational(7) * xp(g, 2, 5)});
    rhs.push_back({{3, 3}, Rational(-8, 7) * (l4 * xp(g, 3, 1)) + Rational(4) * (xp(g, 3, 1) * xp(g, 1, 3)) +
                               Rational(3) * (xp(g, 2, 1) * xp(g, 2, 3)) -
                               Rational(2) * (xp(g, 1, 1) * xp(g, 3, 3)) + Rational(8) * xp(g, 3, 5)});
    rhs.push_back({{1, 5}, Rational(-4, 7) * (l4 * xp(g, 1, 3)) + Rational(2) * (xp(g, 1, 1) * xp(g, 1, 5))});
    rhs.push_back({{2, 5}, Rational(-4, 7) * (l4 * xp(g, 2, 3)) + Rational(3) * (xp(g, 2, 1) * xp(g, 1, 5))});
    rhs.push_back({{3, 5}, Rational(-4, 7) * (l4 * xp(g, 3, 3)) + Rational(4) * (xp(g, 3, 1) * xp(g, 1, 5)) +
                               Rational(3) * (xp(g, 2, 1) * xp(g, 2, 5)) -
                               Rational(2) * (xp(g, 1, 1) * xp(g, 3, 5))});
    return rhs;
}

GradedPolynomial lambda4_in_x(const GenusContext& ctx) {
    const int g = ctx.g();
    return Rational(-3) * xp(g, 1, 1, 2) + Rational(1, 2) * xp(g, 3, 1) - Rational(2) * xp(g, 1, 3);
}

}  // namespace

DynFields dyn_fields(int g) {
    if (g < 1) throw std::invalid_argument("dyn_fields: g must be >= 1");
    DynFields f;
    f.g = g;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2 * g - 1; j += 2)
            f.d0.push_back({{i, j}, Rational(i + j) * xp(g, i, j)});
    for (int j = 1; j <= 2 * g - 1; j += 2) {
        f.d1.push_back({{1, j}, xp(g, 2, j)});
        f.d1.push_back({{2, j}, xp(g, 3, j)});
        GradedPolynomial third = Rational(8) * (xp(g, 1, 1) * xp(g, 2, j)) +
                                 Rational(4) * (xp(g, 2, 1) * xp(g, 1, j));
        if (j + 2 <= 2 * g - 1) third += Rational(4) * xp(g, 2, j + 2);  // x_{2,2g+1} = 0
        f.d1.push_back({{3, j}, third});
    }
    return f;
}

namespace {

/// Evaluates an x/lambda polynomial at the wp realization.
SigmaRatio eval_x_poly(const GradedPolynomial& poly, const GradedPolynomial& sigma,
                       const std::map<std::pair<int, int>, SigmaRatio>& x) {
    SigmaRatio acc{GradedPolynomial::zero(poly.genus()), 0};
    for (const auto& [m, c] : poly.terms()) {
        SigmaRatio term{GradedPolynomial::constant(poly.genus(), c), 0};
        for (const auto& [v, e] : m.factors()) {
            SigmaRatio factor{GradedPolynomial::zero(poly.genus()), 0};
            if (v.kind == VarKind::Lambda) {
                factor = SigmaRatio{GradedPolynomial::from_var(poly.genus(), v), 0};
            } else if (v.kind == VarKind::X1 || v.kind == VarKind::X2 || v.kind == VarKind::X3) {
                int i = v.kind == VarKind::X1 ? 1 : (v.kind == VarKind::X2 ? 2 : 3);
                factor = x.at({i, v.index});
            } else {
                throw std::logic_error("eval_x_poly: unexpected variable family");
            }
            for (int rep = 0; rep < e; ++rep) term = ratio_mul(term, factor);
        }
        acc = ratio_add(sigma, acc, term);
    }
    return acc;
}

}  // namespace

CheckReport dyn_consistency_check(int g, DynFlow flow, int max_lambda_weight) {
    CheckReport rep;
    if (flow == DynFlow::S2 && g != 3)
        throw std::invalid_argument("dyn_consistency_check: the S2 system is the genus-3 table");
    GenusContext ctx(g);
    TruncatedSeries series = sigma_series(g, max_lambda_weight);
    const GradedPolynomial& sigma = series.poly;
    const std::optional<int> bound = max_lambda_weight;

    std::map<std::pair<int, int>, SigmaRatio> x;
    for (int j = 1; j <= 2 * g - 1; j += 2) {
        x[{1, j}] = wp(series, {1, j});
        x[{2, j}] = wp(series, {1, 1, j});
        x[{3, j}] = wp(series, {1, 1, 1, j});
    }

    auto check_equation = [&](const std::pair<int, int>& ij, const SigmaRatio& lhs, const SigmaRatio& rhs,
                              const char* name) {
        SigmaRatio residual = ratio_sub(sigma, lhs, rhs);
        if (!ratio_zero(residual, bound)) {
            std::ostringstream os;
            os << name << " equation for x[" << ij.first << "," << ij.second << "] fails at g=" << g
               << " within lambda weight " << max_lambda_weight;
            rep.fail(os.str());
        }
    };

    if (flow == DynFlow::S0) {
        ScriptL l0 = build_script_L(ctx, 0);
        for (const auto& [ij, xr] : x) {
            SigmaRatio lhs = apply_script_L(l0, series, xr);
            SigmaRatio rhs = ratio_scale(xr, Rational(ij.first + ij.second));
            check_equation(ij, lhs, rhs, "S0");
        }
        return rep;
    }

    if (flow == DynFlow::S1) {
        DynFields f = dyn_fields(g);
        for (const auto& [ij, rhs_poly] : f.d1) {
            SigmaRatio lhs = ratio_diff(sigma, x.at(ij), z_var(1));
            SigmaRatio rhs = eval_x_poly(rhs_poly, sigma, x);
            check_equation(ij, lhs, rhs, "S1");
        }
        return rep;
    }

    // S2: the genus-3 table driven by the tau_2 derivation
    ScriptL l2 = build_script_L(ctx, 1);
    for (const auto& [ij, rhs_poly] : s2_table(ctx)) {
        SigmaRatio lhs = apply_script_L(l2, series, x.at(ij));
        SigmaRatio rhs = eval_x_poly(rhs_poly, sigma, x);
        check_equation(ij, lhs, rhs, "S2");
    }
    // lambda_4 = -3 x_{1,1}^2 + x_{3,1}/2 - 2 x_{1,3} as a series identity
    SigmaRatio lam = SigmaRatio{lambda_symbol(ctx, 4), 0};
    SigmaRatio rhs = eval_x_poly(lambda4_in_x(ctx), sigma, x);
    SigmaRatio residual = ratio_sub(sigma, lam, rhs);
    if (!ratio_zero(residual, bound)) rep.fail("lambda_4 identity fails at g=3");
    return rep;
}

}  // namespace hsf
