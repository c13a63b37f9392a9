#include "hsf/ratlimit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hsf/linear.hpp"

namespace hsf {

namespace {

void enumerate(const GenusContext& ctx, int var_pos, int remaining, Monomial acc,
               std::vector<Monomial>& out) {
    const auto& zs = ctx.z_vars();
    if (var_pos == static_cast<int>(zs.size())) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    // z1 (var_pos == last step) absorbs whatever remains
    const int idx = zs[var_pos].index;
    for (int e = 0; e * idx <= remaining; ++e)
        enumerate(ctx, var_pos + 1, remaining - e * idx, acc.times_var(zs[var_pos], e), out);
}

Monomial shift_monomial(const Monomial& m, VarId from, VarId to) {
    return m.times_var(from, -1).times_var(to, 1);
}

}  // namespace

std::vector<Monomial> stratum_monomials(const GenusContext& ctx, int weighted_degree) {
    std::vector<Monomial> out;
    if (weighted_degree < 0) return out;
    enumerate(ctx, 0, weighted_degree, Monomial(), out);
    return out;
}

namespace {

RationalLimitSolution solve_m_nullspace(const GenusContext& ctx) {
    const int g = ctx.g();
    const int degree = g * (g + 1) / 2;
    const std::vector<Monomial> basis = stratum_monomials(ctx, degree);

    // rows: output monomials of hat_H_{2k} applied to the stratum, k = 0,1,2
    RationalMatrix a;
    for (int k = 0; k <= 2; ++k) {
        DifferentialOperator op = hat_H(ctx, k);
        std::map<Monomial, std::vector<std::pair<std::size_t, Rational>>> rows;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            GradedPolynomial img = apply(op, GradedPolynomial::from_monomial(g, basis[col], Rational(1)));
            for (const auto& [m, c] : img.terms()) rows[m].push_back({col, c});
        }
        for (const auto& [m, cols] : rows) {
            std::vector<Rational> row(basis.size(), Rational(0));
            for (const auto& [col, c] : cols) row[col] = c;
            a.push_back(std::move(row));
        }
    }

    auto kernel = nullspace_basis(std::move(a), basis.size());
    if (kernel.size() != 1)
        throw std::runtime_error("solve_m: joint kernel dimension is " + std::to_string(kernel.size()) +
                                 " at g=" + std::to_string(g) + ", expected 1");

    GradedPolynomial m(g);
    for (std::size_t col = 0; col < basis.size(); ++col) m.add_term(basis[col], kernel[0][col]);

    const Monomial lead = Monomial::var(z_var(1), degree);
    Rational lc = m.coefficient(lead);
    if (lc.is_zero()) throw std::runtime_error("solve_m: kernel vector has no z1-power term");
    m *= lc.reciprocal();
    return {g, m, Rational(1)};
}

RationalLimitSolution solve_m_induction(const GenusContext& ctx) {
    const int g = ctx.g();
    const int degree = g * (g + 1) / 2;

    std::vector<Monomial> basis = stratum_monomials(ctx, degree);
    // Resolution order: total degree descending, then highest z-index
    // descending, then canonical order as tie-break.
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
        int ma = a.max_index_of_kind(VarKind::Z), mb = b.max_index_of_kind(VarKind::Z);
        if (ma != mb) return ma > mb;
        return a < b;
    });

    GradedPolynomial partial(g);
    std::vector<DifferentialOperator> hats;
    for (int k = 0; k <= 2 * g - 1; ++k) hats.push_back(hat_H(ctx, k));

    for (const Monomial& mono : basis) {
        const int max_idx = mono.max_index_of_kind(VarKind::Z);
        if (max_idx <= 1) {
            // the seed z1^degree, fixed by the normalization
            partial.add_term(mono, Rational(1));
            continue;
        }
        // Use the operator whose z1-transport term z1 d_{max_idx} reaches the
        // target monomial; everything else it touches is already resolved.
        const int m = (max_idx - 1) / 2;
        const Monomial target = shift_monomial(mono, z_var(max_idx), z_var(1));
        const Rational residual = apply(hats[m], partial).coefficient(target);
        const Rational pivot = Rational(mono.exponent(z_var(max_idx)));
        partial.add_term(mono, -residual / pivot);
    }
    return {g, partial, Rational(1)};
}

}  // namespace

RationalLimitSolution solve_m(int g, SolveMethod method) {
    GenusContext ctx(g);
    return method == SolveMethod::Nullspace ? solve_m_nullspace(ctx) : solve_m_induction(ctx);
}

CheckReport verify_annihilation(const RationalLimitSolution& sol, int up_to_k) {
    GenusContext ctx(sol.g);
    if (up_to_k > 2 * sol.g - 1) throw std::invalid_argument("verify_annihilation: k exceeds 2g-1");
    CheckReport rep;
    for (int k = 0; k <= up_to_k; ++k) {
        GradedPolynomial r = apply(hat_H(ctx, k), sol.poly);
        if (!r.is_zero()) {
            std::ostringstream os;
            os << "hat_H_" << 2 * k << " m_" << sol.g << " != 0 (" << r.term_count() << " residual terms)";
            rep.fail(os.str());
        }
    }
    return rep;
}

CheckReport adler_moser_recursion_check(int max_g) {
    if (max_g < 1) throw std::invalid_argument("adler_moser_recursion_check: max_g must be >= 1");
    CheckReport rep;
    std::vector<GradedPolynomial> m;  // m[0] = 1 in the largest context
    for (int g = 1; g <= max_g; ++g) m.push_back(solve_m(g).poly);

    for (int g = 1; g + 1 <= max_g; ++g) {
        const int ambient = g + 1;
        GradedPolynomial hi = m[g].with_genus(ambient);
        GradedPolynomial mid = m[g - 1].with_genus(ambient);
        GradedPolynomial lo = g >= 2 ? m[g - 2].with_genus(ambient)
                                     : GradedPolynomial::constant(ambient, Rational(1));
        VarId z1 = z_var(1);
        GradedPolynomial residual = partial_derivative(hi, z1) * lo - hi * partial_derivative(lo, z1) -
                                    Rational(2 * g + 1) * (mid * mid);
        if (!residual.is_zero()) {
            std::ostringstream os;
            os << "Adler-Moser recursion fails between m_" << g + 1 << " and m_" << g - 1;
            rep.fail(os.str());
        }
    }
    return rep;
}

}  // namespace hsf
