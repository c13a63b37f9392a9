#include "hsf/heat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hsf {

namespace {

// c * z-part * d-part, with any out-of-window z index (in the coefficient or
// the derivative) collapsing the whole term to zero.
void add_z_term(DifferentialOperator& op, const GenusContext& ctx, GradedPolynomial coeff,
                const std::vector<int>& z_factors, const std::vector<int>& z_derivs) {
    for (int a : z_factors) {
        if (!ctx.valid_z_index(a)) return;
        coeff = coeff * z_poly(ctx, a);
    }
    DerivMonomial d;
    for (int b : z_derivs) {
        if (!ctx.valid_z_index(b)) return;
        d = d.times_var(z_var(b), 1);
    }
    op.add_term(d, coeff);
}

GradedPolynomial rat_const(const GenusContext& ctx, const Rational& c) {
    return GradedPolynomial::constant(ctx.g(), c);
}

}  // namespace

GradedPolynomial v_poly(const GenusContext& ctx, int k, int m) {
    const int g = ctx.g();
    if (k < 1 || k > 2 * g || m < 1 || m > 2 * g)
        throw std::invalid_argument("v_poly: indices must lie in 1..2g");
    if (k > m) std::swap(k, m);
    GradedPolynomial v(g);
    for (int s = 0; s <= k - 1; ++s)
        v += Rational(2 * (k + m - 2 * s)) * (lambda_symbol(ctx, 2 * s) * lambda_symbol(ctx, 2 * (k + m - s)));
    v -= Rational(2 * k * (2 * g - m + 1), 2 * g + 1) * (lambda_symbol(ctx, 2 * k) * lambda_symbol(ctx, 2 * m));
    return v;
}

DifferentialOperator build_L(const GenusContext& ctx, int k) {
    const int g = ctx.g();
    if (k < 0 || k > 2 * g - 1) throw std::invalid_argument("build_L: k must lie in 0..2g-1");
    DifferentialOperator L(g);
    for (int q = 2; q <= 2 * g + 1; ++q)
        L.add_term(DerivMonomial::var(lambda_var(2 * q)), v_poly(ctx, k + 1, q - 1));
    return L;
}

DifferentialOperator build_H(const GenusContext& ctx, int k) {
    const int g = ctx.g();
    if (k < 0 || k > 2) throw std::invalid_argument("build_H: k must be 0, 1 or 2");
    DifferentialOperator H(g);

    if (k == 0) {
        for (int s = 1; s <= g; ++s)
            add_z_term(H, ctx, rat_const(ctx, Rational(2 * s - 1)), {2 * s - 1}, {2 * s - 1});
        H.add_term(DerivMonomial::unit(), rat_const(ctx, Rational(-g * (g + 1), 2)));
        return H;
    }

    if (k == 1) {
        add_z_term(H, ctx, rat_const(ctx, Rational(1, 2)), {}, {1, 1});
        for (int s = 1; s <= g - 1; ++s)
            add_z_term(H, ctx, rat_const(ctx, Rational(2 * s - 1)), {2 * s - 1}, {2 * s + 1});
        for (int s = 1; s <= g - 1; ++s)
            add_z_term(H, ctx, Rational(-4 * (g - s), 2 * g + 1) * lambda_symbol(ctx, 4), {2 * s + 1},
                       {2 * s - 1});
        for (int s = 1; s <= g; ++s) {
            GradedPolynomial c = Rational(2 * s - 1, 2) * lambda_symbol(ctx, 4 * s) -
                                 Rational(2 * (g - s + 1), 2 * g + 1) *
                                     (lambda_symbol(ctx, 4) * lambda_symbol(ctx, 4 * s - 4));
            add_z_term(H, ctx, c, {2 * s - 1, 2 * s - 1}, {});
        }
        return H;
    }

    // k == 2
    add_z_term(H, ctx, rat_const(ctx, Rational(1)), {}, {1, 3});
    for (int s = 1; s <= g - 2; ++s)
        add_z_term(H, ctx, rat_const(ctx, Rational(2 * s - 1)), {2 * s - 1}, {2 * s + 3});
    for (int s = 1; s <= g - 1; ++s)
        add_z_term(H, ctx, Rational(2 * s - 1) * lambda_symbol(ctx, 4), {2 * s + 1}, {2 * s + 1});
    for (int s = 1; s <= g - 1; ++s)
        add_z_term(H, ctx, Rational(-6 * (g - s), 2 * g + 1) * lambda_symbol(ctx, 6), {2 * s + 1},
                   {2 * s - 1});
    for (int s = 1; s <= g; ++s) {
        GradedPolynomial c = Rational(2 * s - 1) * lambda_symbol(ctx, 4 * s + 2) -
                             Rational(3 * (g - s + 1), 2 * g + 1) *
                                 (lambda_symbol(ctx, 6) * lambda_symbol(ctx, 4 * s - 4));
        add_z_term(H, ctx, c, {2 * s - 1, 2 * s - 1}, {});
    }
    for (int s = 1; s <= g - 1; ++s)
        add_z_term(H, ctx, Rational(2 * s - 1) * lambda_symbol(ctx, 4 * s + 4), {2 * s - 1, 2 * s + 1}, {});
    H.add_term(DerivMonomial::unit(), Rational(-g * (g - 1), 2) * lambda_symbol(ctx, 4));
    return H;
}

std::vector<DifferentialOperator> build_Q_family(const GenusContext& ctx, int kmax) {
    const int g = ctx.g();
    if (kmax < 0 || kmax > 2 * g - 1) throw std::invalid_argument("build_Q: k must lie in 0..2g-1");
    std::vector<DifferentialOperator> q;
    for (int k = 0; k <= std::min(kmax, 2); ++k) q.push_back(build_L(ctx, k) - build_H(ctx, k));
    for (int k = 3; k <= kmax; ++k) {
        DifferentialOperator bracket = commutator(q[1], q[k - 1]);
        DifferentialOperator correction =
            compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 2 * k)), q[0]) -
            compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 4)), q[k - 2]);
        q.push_back(Rational(1, 2 * (k - 2)) * bracket -
                    Rational(2 * (2 * g - k + 1), (k - 2) * (2 * g + 1)) * correction);
    }
    return q;
}

DifferentialOperator build_Q(const GenusContext& ctx, int k) {
    return build_Q_family(ctx, k).at(static_cast<std::size_t>(k));
}

DifferentialOperator h_part_of_Q(const GenusContext& ctx, int k) {
    DifferentialOperator h = build_L(ctx, k) - build_Q(ctx, k);
    for (const auto& [d, c] : h.terms())
        if (d.contains_kind(VarKind::Lambda))
            throw std::runtime_error("h_part_of_Q: lambda derivatives survive at k=" + std::to_string(k) +
                                     "; Q does not carry the expected L-part");
    return h;
}

CheckReport h_shape_check(const DifferentialOperator& op, const GenusContext& ctx, int k) {
    const int g = ctx.g();
    CheckReport rep;

    auto lambda_degree_at_most = [](const GradedPolynomial& p, int bound) {
        for (const auto& [m, c] : p.terms())
            if (m.degree_of_kind(VarKind::Lambda) > bound) return false;
        return true;
    };

    for (const auto& [d, coeff] : op.terms()) {
        const int order = d.total_degree();
        if (d.contains_kind(VarKind::Lambda)) {
            rep.fail("lambda derivative present: " + d.factors().front().first.name());
            continue;
        }
        if (order > 2) {
            rep.fail("derivative order exceeds 2");
            continue;
        }
        if (order == 2) {
            // alpha block: coefficient must be the bare constant of the
            // symmetrized double sum: 1 for a != b, 1/2 for a = b.
            int a = 0, b = 0;
            if (d.factors().size() == 1) {
                a = b = d.factors()[0].first.index;
            } else {
                a = d.factors()[0].first.index;
                b = d.factors()[1].first.index;
            }
            Rational expect = a + b == 2 * k ? (a == b ? Rational(1, 2) : Rational(1)) : Rational(0);
            if (coeff != GradedPolynomial::constant(g, expect))
                rep.fail("alpha coefficient at d" + std::to_string(a) + " d" + std::to_string(b) +
                         " is not " + expect.str());
        } else if (order == 1) {
            // beta block: z-linear coefficients, each lambda-polynomial affine
            for (const auto& [m, c] : coeff.terms()) {
                if (m.degree_of_kind(VarKind::Z) != 1) {
                    rep.fail("first-order coefficient not z-linear at d" +
                             std::to_string(d.factors()[0].first.index));
                    break;
                }
            }
            if (!lambda_degree_at_most(coeff, 1))
                rep.fail("beta coefficient not linear in lambda at d" +
                         std::to_string(d.factors()[0].first.index));
        } else {
            // gamma z-quadratic block plus the delta constant
            GradedPolynomial gamma(g), delta(g);
            bool bad_degree = false;
            for (const auto& [m, c] : coeff.terms()) {
                int zdeg = m.degree_of_kind(VarKind::Z);
                if (zdeg == 2)
                    gamma.add_term(m, c);
                else if (zdeg == 0)
                    delta.add_term(m, c);
                else
                    bad_degree = true;
            }
            if (bad_degree) rep.fail("zero-order part has z-degree 1 terms");
            if (!lambda_degree_at_most(gamma, 2)) rep.fail("gamma coefficient not quadratic in lambda");
            const int half = (k + 1) / 2;
            Rational dc = Rational(-(2 * g - k + 1) * (2 * g - k), 4) +
                          Rational((g + half - k) * (g - half), 2);
            GradedPolynomial expect_delta = dc * lambda_symbol(ctx, 2 * k);
            if (delta != expect_delta) {
                std::ostringstream os;
                os << "delta mismatch at k=" << k;
                rep.fail(os.str());
            }
        }
    }
    return rep;
}

// Defined for any k >= 0: beyond k = 2g-1 the truncation empties the sums.
DifferentialOperator hat_H(const GenusContext& ctx, int k) {
    const int g = ctx.g();
    if (k < 0) throw std::invalid_argument("hat_H: k must be >= 0");
    DifferentialOperator H(g);
    if (k == 0) {
        for (int s = 1; s <= g; ++s)
            add_z_term(H, ctx, rat_const(ctx, Rational(2 * s - 1)), {2 * s - 1}, {2 * s - 1});
        H.add_term(DerivMonomial::unit(), rat_const(ctx, Rational(-g * (g + 1), 2)));
        return H;
    }
    for (int s = 1; s <= k; ++s)
        add_z_term(H, ctx, rat_const(ctx, Rational(1, 2)), {}, {2 * s - 1, 2 * k + 1 - 2 * s});
    for (int s = 1; s <= g - k; ++s)
        add_z_term(H, ctx, rat_const(ctx, Rational(2 * s - 1)), {2 * s - 1}, {2 * s + 2 * k - 1});
    return H;
}

DifferentialOperator build_A(int k, int active_g) {
    if (k < 0 || active_g < 1) throw std::invalid_argument("build_A: need k >= 0 and active_g >= 1");
    GenusContext ctx(active_g);
    DifferentialOperator A(active_g);
    for (int s = 1; s <= k; ++s)
        add_z_term(A, ctx, rat_const(ctx, Rational(-1, 2)), {}, {2 * s - 1, 2 * k + 1 - 2 * s});
    for (int s = 1; s <= active_g; ++s)
        add_z_term(A, ctx, rat_const(ctx, Rational(-(2 * s - 1))), {2 * s - 1}, {2 * s + 2 * k - 1});
    return A;
}

CheckReport witt_check(int max_k, int active_g) {
    CheckReport rep;
    if (max_k < 2) throw std::invalid_argument("witt_check: max_k must be >= 2");
    std::vector<DifferentialOperator> a;
    for (int k = 0; k <= 2 * max_k; ++k) a.push_back(build_A(k, active_g));
    for (int i = 0; i <= max_k; ++i) {
        for (int j = i; j <= max_k; ++j) {
            DifferentialOperator lhs = commutator(a[i], a[j]);
            DifferentialOperator rhs = Rational(2 * (j - i)) * a[i + j];
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "[A_" << 2 * i << ", A_" << 2 * j << "] != " << 2 * (j - i) << " A_" << 2 * (i + j)
                   << " at g=" << active_g;
                rep.fail(os.str());
            }
        }
    }
    // second-order recursion of the rational-limit operators
    GenusContext ctx(active_g);
    for (int k = 3; k <= 2 * active_g - 1; ++k) {
        DifferentialOperator lhs = Rational(-2 * (k - 2)) * hat_H(ctx, k);
        DifferentialOperator rhs = commutator(hat_H(ctx, 1), hat_H(ctx, k - 1));
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "-2(k-2) hat_H_" << 2 * k << " != [hat_H_2, hat_H_" << 2 * (k - 1) << "] at g=" << active_g;
            rep.fail(os.str());
        }
    }
    return rep;
}

CheckReport l_bracket_check(const GenusContext& ctx, int k) {
    const int g = ctx.g();
    CheckReport rep;
    if (k < 1 || k > 2 * g - 2) throw std::invalid_argument("l_bracket_check: k must lie in 1..2g-2");
    DifferentialOperator lhs = commutator(build_L(ctx, 1), build_L(ctx, k));
    DifferentialOperator rhs = Rational(2 * (k - 1)) * build_L(ctx, k + 1) +
                               Rational(4 * (2 * g - k), 2 * g + 1) *
                                   (compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 2 * k + 2)),
                                            build_L(ctx, 0)) -
                                    compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 4)),
                                            build_L(ctx, k - 1)));
    if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "[L_2, L_" << 2 * k << "] identity fails at g=" << g;
        rep.fail(os.str());
    }
    return rep;
}

}  // namespace hsf
