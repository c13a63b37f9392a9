#include "hsf/symfun.hpp"

#include <sstream>
#include <stdexcept>

#include "hsf/linear.hpp"
#include "hsf/ratlimit.hpp"
#include "hsf/series.hpp"

namespace hsf {

namespace {

GradedPolynomial sym_const(const Rational& c) { return GradedPolynomial::constant(0, c); }

/// e_k for any integer k: 1 at k = 0, 0 below.
GradedPolynomial e_symbol(int k) {
    if (k < 0) return GradedPolynomial::zero(0);
    if (k == 0) return sym_const(Rational(1));
    return GradedPolynomial::from_var(0, e_var(k));
}

}  // namespace

const GradedPolynomial& e_in_p(int k) {
    if (k < 0) throw std::invalid_argument("e_in_p: negative index");
    static std::vector<GradedPolynomial> cache = {sym_const(Rational(1))};
    // Newton's identity from E = exp N: k e_k = sum_{n=1}^{k} (-1)^{n-1} p_n e_{k-n}.
    while (static_cast<int>(cache.size()) <= k) {
        const int m = static_cast<int>(cache.size());
        GradedPolynomial acc(0);
        for (int n = 1; n <= m; ++n) {
            Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
            acc += sign * (GradedPolynomial::from_var(0, p_var(n)) * cache[m - n]);
        }
        acc *= Rational(1, m);
        cache.push_back(acc);
    }
    return cache[k];
}

GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return sym_const(Rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");

    // Laplace expansion along the first remaining row over a column mask.
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;

    struct Rec {
        const std::vector<std::vector<GradedPolynomial>>& m;
        GradedPolynomial run(std::size_t row, std::vector<std::size_t>& cols) {
            if (cols.empty()) return GradedPolynomial::constant(m[0][0].genus(), Rational(1));
            GradedPolynomial acc(m[0][0].genus());
            for (std::size_t pos = 0; pos < cols.size(); ++pos) {
                const GradedPolynomial& entry = m[row][cols[pos]];
                if (entry.is_zero()) continue;
                std::vector<std::size_t> rest = cols;
                rest.erase(rest.begin() + static_cast<long>(pos));
                GradedPolynomial minor = run(row + 1, rest);
                GradedPolynomial contrib = entry * minor;
                if (pos % 2 == 1) contrib = -contrib;
                acc += contrib;
            }
            return acc;
        }
    } rec{m};
    return rec.run(0, cols);
}

SymPoly schur_poly(int g, SymBasis basis) {
    if (g < 0) throw std::invalid_argument("schur_poly: g must be >= 0");
    std::vector<std::vector<GradedPolynomial>> mat(static_cast<std::size_t>(g),
                                                   std::vector<GradedPolynomial>(static_cast<std::size_t>(g)));
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j) mat[i - 1][j - 1] = e_symbol(g - 2 * i + j + 1);
    GradedPolynomial det = poly_det(mat);
    if (basis == SymBasis::E) return {det, SymBasis::E};

    std::map<VarId, GradedPolynomial> subs;
    for (int k = 1; k <= 2 * g - 1; ++k) subs[e_var(k)] = e_in_p(k);
    GradedPolynomial p = substitute(det, subs, 0);
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind == VarKind::P && v.index % 2 == 0)
                throw std::runtime_error("schur_poly: even power sum survived in ShW_" + std::to_string(g));
    return {p, SymBasis::P};
}

GradedPolynomial wronskian(const std::vector<GradedPolynomial>& funcs, VarId var) {
    const std::size_t n = funcs.size();
    if (n == 0) return sym_const(Rational(1));
    std::vector<std::vector<GradedPolynomial>> m(n, std::vector<GradedPolynomial>(n));
    m[0] = funcs;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = partial_derivative(m[i - 1][j], var);
    return poly_det(m);
}

CheckReport burchnall_chaundy_check(const std::vector<GradedPolynomial>& seq) {
    CheckReport rep;
    if (seq.size() < 2) throw std::invalid_argument("burchnall_chaundy_check: need phi_0 and phi_1");
    const VarId x = p_var(1);
    if (!(seq[0] == sym_const(Rational(1)))) rep.fail("phi_0 != 1");
    if (!(seq[1] == GradedPolynomial::from_var(0, x))) rep.fail("phi_1 != p1");
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        GradedPolynomial residual = partial_derivative(seq[k + 1], x) * seq[k - 1] -
                                    seq[k + 1] * partial_derivative(seq[k - 1], x) - seq[k] * seq[k];
        if (!residual.is_zero()) {
            std::ostringstream os;
            os << "Burchnall-Chaundy relation fails at k=" << k << " (" << residual.term_count()
               << " residual terms)";
            rep.fail(os.str());
        }
    }
    return rep;
}

Rational mu_const(int k) {
    if (k < 0) throw std::invalid_argument("mu_const: negative index");
    if (k <= 1) return Rational(1);
    Rational m(1);
    for (int j = 1; j <= k; ++j) {
        Rational base(2 * k - 2 * j + 1);
        for (int rep = 0; rep < j; ++rep) m *= base;
    }
    return m;
}

Rational alpha_const(int odd_index) {
    if (odd_index < 3 || odd_index % 2 == 0)
        throw std::invalid_argument("alpha_const: index must be odd and >= 3");
    const int i = (odd_index + 1) / 2;
    Rational a(2 * i - 1);
    for (int m = 3; m <= 2 * i - 3; m += 2) a *= Rational(m) * Rational(m);
    if (i % 2 == 0) a = -a;
    return a;
}

AdlerMoserConstants adler_moser_constants(int max_k) {
    AdlerMoserConstants c;
    for (int k = 0; k <= max_k; ++k) c.mu[k] = mu_const(k);
    for (int i = 2; i <= max_k; ++i) c.alpha[2 * i - 1] = alpha_const(2 * i - 1);
    return c;
}

std::vector<GradedPolynomial> adler_moser_from_bc(const std::vector<GradedPolynomial>& seq) {
    CheckReport pre = burchnall_chaundy_check(seq);
    if (!pre.ok)
        throw std::invalid_argument("adler_moser_from_bc: input is not a Burchnall-Chaundy sequence: " +
                                    pre.failures.front());
    std::vector<GradedPolynomial> theta;
    for (std::size_t k = 0; k < seq.size(); ++k) theta.push_back(mu_const(static_cast<int>(k)) * seq[k]);
    const VarId x = p_var(1);
    for (std::size_t k = 1; k + 1 < theta.size(); ++k) {
        GradedPolynomial residual = partial_derivative(theta[k + 1], x) * theta[k - 1] -
                                    theta[k + 1] * partial_derivative(theta[k - 1], x) -
                                    Rational(2 * static_cast<int>(k) + 1) * (theta[k] * theta[k]);
        if (!residual.is_zero())
            throw std::runtime_error("adler_moser_from_bc: weighted relation fails at k=" +
                                     std::to_string(k));
    }
    return theta;
}

Rational tau_from_p(int k) {
    if (k < 2) throw std::invalid_argument("tau_from_p: k must be >= 2");
    Rational c = Rational(1, 2 * k - 1) * mu_const(k) / mu_const(k - 2);
    if (k % 2 == 0) c = -c;
    return c;
}

TanhChange tanh_change_of_vars(int g, int order) {
    if (order < 3 || order % 2 == 0)
        throw std::invalid_argument("tanh_change_of_vars: order must be odd and >= 3");
    (void)g;
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    const RationalSeries th = tanh_series(len);

    // u = sum tau_i* t^{2i-1}; series coefficients are tau-polynomials.
    std::vector<GradedPolynomial> u(len, GradedPolynomial::zero(0));
    TanhChange out;
    out.order = order;

    auto series_mul_poly = [&](const std::vector<GradedPolynomial>& a,
                               const std::vector<GradedPolynomial>& b) {
        std::vector<GradedPolynomial> r(len, GradedPolynomial::zero(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < len; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    };

    for (int d = 3; d <= order; d += 2) {
        const int i = (d + 1) / 2;
        // nonlinear tail of th(u) using the coefficients solved so far
        std::vector<GradedPolynomial> nonlinear(len, GradedPolynomial::zero(0));
        std::vector<GradedPolynomial> power = series_mul_poly(series_mul_poly(u, u), u);
        for (int m = 3; m <= order; m += 2) {
            if (!th[static_cast<std::size_t>(m)].is_zero())
                for (std::size_t s = 0; s < len; ++s)
                    nonlinear[s] += th[static_cast<std::size_t>(m)] * power[s];
            if (m + 2 <= order) power = series_mul_poly(series_mul_poly(power, u), u);
        }
        GradedPolynomial lhs = Rational(1) / alpha_const(d) * GradedPolynomial::from_var(0, tau_var(i));
        u[static_cast<std::size_t>(d)] = lhs - nonlinear[static_cast<std::size_t>(d)];
        out.tau_star[i] = u[static_cast<std::size_t>(d)];
    }
    return out;
}

ShwMatch match_shw_to_z(int g) {
    if (g < 1) throw std::invalid_argument("match_shw_to_z: g must be >= 1");
    ShwMatch out;
    out.g = g;
    GenusContext ctx(g);
    out.p_subst[1] = z_poly(ctx, 1);

    // candidates for the correction q_{2k-1}: weight-(2k-1) monomials in
    // z3 .. z_{2k-3} (z1 is excluded by the statement, z_{2k-1} is the beta term)
    auto q_candidates = [&](int target) {
        std::vector<Monomial> cand;
        struct Rec {
            int target;
            std::vector<int> vars;
            std::vector<Monomial>& out;
            void run(std::size_t pos, int remaining, Monomial acc) {
                if (remaining == 0) {
                    out.push_back(acc);
                    return;
                }
                if (pos == vars.size()) return;
                for (int e = 0; e * vars[pos] <= remaining; ++e)
                    run(pos + 1, remaining - e * vars[pos], acc.times_var(z_var(vars[pos]), e));
            }
        };
        std::vector<int> vars;
        for (int j = 3; j <= target - 2; j += 2) vars.push_back(j);
        Rec rec{target, vars, cand};
        rec.run(0, target, Monomial());
        return cand;
    };

    for (int k = 2; k <= g; ++k) {
        const int idx = 2 * k - 1;
        SymPoly shw = schur_poly(k, SymBasis::P);
        // ShW_k must be linear in p_{2k-1} at this scale
        for (const auto& [m, c] : shw.poly.terms())
            if (m.exponent(p_var(idx)) > 1)
                throw std::runtime_error("match_shw_to_z: ShW is not linear in its top power sum");
        GradedPolynomial slope = partial_derivative(shw.poly, p_var(idx));
        GradedPolynomial rest = shw.poly - slope * GradedPolynomial::from_var(0, p_var(idx));

        std::map<VarId, GradedPolynomial> known;
        for (const auto& [pidx, repl] : out.p_subst) known[p_var(pidx)] = repl;

        GradedPolynomial slope_z = substitute(slope, known, g);
        GradedPolynomial rest_z = substitute(rest, known, g);
        GradedPolynomial target = mu_const(k).reciprocal() * solve_m(k).poly.with_genus(g) - rest_z;

        // unknown P = beta z_{2k-1} + sum c_j M_j solves P * slope_z = target
        std::vector<Monomial> unknowns = {Monomial::var(z_var(idx))};
        for (const Monomial& m : q_candidates(idx)) unknowns.push_back(m);

        std::map<Monomial, std::size_t> row_of;
        RationalMatrix a;
        std::vector<Rational> b;
        auto row_for = [&](const Monomial& m) {
            auto [it, fresh] = row_of.try_emplace(m, a.size());
            if (fresh) {
                a.push_back(std::vector<Rational>(unknowns.size(), Rational(0)));
                b.push_back(Rational(0));
            }
            return it->second;
        };
        for (std::size_t col = 0; col < unknowns.size(); ++col) {
            GradedPolynomial prod = GradedPolynomial::from_monomial(g, unknowns[col], Rational(1)) * slope_z;
            for (const auto& [m, c] : prod.terms()) a[row_for(m)][col] = c;
        }
        for (const auto& [m, c] : target.terms()) b[row_for(m)] = c;

        LinearSolveResult sol = solve_linear(a, b);
        if (!sol.consistent || !sol.unique)
            throw std::runtime_error("match_shw_to_z: stage " + std::to_string(k) +
                                     " solve is not uniquely consistent");
        GradedPolynomial p_poly(g);
        for (std::size_t col = 0; col < unknowns.size(); ++col) p_poly.add_term(unknowns[col], sol.solution[col]);
        out.p_subst[idx] = p_poly;
    }

    // full verification against the rational limit
    std::map<VarId, GradedPolynomial> subs;
    for (const auto& [pidx, repl] : out.p_subst) subs[p_var(pidx)] = repl;
    GradedPolynomial recovered = mu_const(g) * substitute(schur_poly(g, SymBasis::P).poly, subs, g);
    if (!(recovered == solve_m(g).poly))
        throw std::runtime_error("match_shw_to_z: mu_g ShW_g(p(z)) != m_g after substitution");
    return out;
}

}  // namespace hsf
