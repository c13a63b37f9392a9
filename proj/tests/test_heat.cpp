#include <doctest.h>

#include "golden.hpp"
#include "hsf/heat.hpp"

using namespace hsf;

namespace {

// term builder: coeff * product of z-derivatives
DifferentialOperator T(const GradedPolynomial& coeff, const std::vector<int>& zderivs) {
    DerivMonomial d;
    for (int b : zderivs) d = d.times_var(z_var(b), 1);
    return DifferentialOperator::from_term(coeff, d);
}

DifferentialOperator Tl(const GradedPolynomial& coeff, int lambda_index) {
    return DifferentialOperator::from_term(coeff, DerivMonomial::var(lambda_var(lambda_index)));
}

}  // namespace

TEST_CASE("v matrix examples and symmetry") {
    GenusContext g1(1), g2(2);
    CHECK(v_poly(g1, 1, 1) == Rational(4) * lambda_symbol(g1, 4));
    CHECK(v_poly(g1, 1, 2) == Rational(6) * lambda_symbol(g1, 6));
    CHECK(v_poly(g2, 2, 2) ==
          Rational(8) * lambda_symbol(g2, 8) - Rational(12, 5) * lambda_symbol(g2, 4).pow(2));
    for (int g = 1; g <= 4; ++g) {
        GenusContext ctx(g);
        for (int k = 1; k <= 2 * g; ++k)
            for (int m = k; m <= 2 * g; ++m) {
                CHECK(v_poly(ctx, k, m) == v_poly(ctx, m, k));
                Weight w = weight_of(v_poly(ctx, k, m));
                CHECK(w.equals(2 * k + 2 * m));
            }
    }
    CHECK_THROWS_AS(v_poly(g1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(v_poly(g1, 1, 3), std::invalid_argument);
}

TEST_CASE("L fields at genus 1 and the Euler field") {
    GenusContext g1(1);
    auto L0 = build_L(g1, 0);
    CHECK(L0 == Tl(Rational(4) * lambda_symbol(g1, 4), 4) + Tl(Rational(6) * lambda_symbol(g1, 6), 6));
    auto L2 = build_L(g1, 1);
    CHECK(L2 == Tl(Rational(6) * lambda_symbol(g1, 6), 4) +
                    Tl(Rational(-4, 3) * lambda_symbol(g1, 4).pow(2), 6));

    GenusContext g2(2);
    auto p = lambda_symbol(g2, 4) * lambda_symbol(g2, 6);
    CHECK(apply(build_L(g2, 0), p) == Rational(10) * p);
}

TEST_CASE("L bracket contract against the v matrix") {
    for (int g = 2; g <= 3; ++g) {
        GenusContext ctx(g);
        for (int i = 0; i <= 2 * g - 1; ++i) {
            auto Li = build_L(ctx, i);
            for (int q = 2; q <= 2 * g + 1; ++q) {
                auto mult = DifferentialOperator::multiplication(lambda_symbol(ctx, 2 * q));
                auto expect = DifferentialOperator::multiplication(v_poly(ctx, i + 1, q - 1));
                CHECK(commutator(Li, mult) == expect);
            }
        }
    }
}

TEST_CASE("Euler covariance of L and weight of H") {
    for (int g = 1; g <= 6; ++g) {
        GenusContext ctx(g);
        auto L0 = build_L(ctx, 0);
        for (int k = 0; k <= 2 * g - 1; ++k) {
            auto Lk = build_L(ctx, k);
            CHECK(commutator(L0, Lk) == Rational(2 * k) * Lk);
            Weight w = operator_weight(Lk);
            CHECK(w.equals(2 * k));
        }
        for (int k = 0; k <= 2; ++k) {
            Weight w = operator_weight(build_H(ctx, k));
            CHECK(w.equals(2 * k));
        }
    }
}

TEST_CASE("H operators reproduce the displayed tables, genus 1..4") {
    for (int g = 1; g <= 4; ++g) {
        GenusContext ctx(g);
        for (int k = 0; k <= 2; ++k) CHECK(op_equal(build_H(ctx, k), golden::h_table(g, k)));
    }
    GenusContext g2(2);
    CHECK(!op_equal(build_H(g2, 1), build_H(g2, 2)));
}

TEST_CASE("Q recursion closes in the representation") {
    GenusContext g2(2);
    // The recursion's lambda-derivative component must be exactly L_6,
    // so subtracting it leaves a pure z-operator.
    auto h6 = h_part_of_Q(g2, 3);
    for (const auto& [d, c] : h6.terms()) CHECK(!d.contains_kind(VarKind::Lambda));

    // constant term of the H-part of Q_6 at genus 2
    const GradedPolynomial order_zero = h6.coefficient(DerivMonomial::unit());
    GradedPolynomial expect(2);
    for (const auto& [m, c] : order_zero.terms())
        if (m.degree_of_kind(VarKind::Z) == 0) expect.add_term(m, c);
    CHECK(expect == Rational(-1, 2) * lambda_symbol(g2, 6));

    // pure second-order part: (1/2) d3^2 only
    auto d33 = DerivMonomial::var(z_var(3), 2);
    CHECK(h6.coefficient(d33) == GradedPolynomial::constant(2, Rational(1, 2)));
    auto d15 = DerivMonomial::var(z_var(1)).times_var(z_var(5), 1);
    CHECK(h6.coefficient(d15).is_zero());
}

TEST_CASE("shape check on the closed-form tables") {
    GenusContext g1(1), g2(2), g3(3);
    CHECK(h_shape_check(build_H(g2, 2), g2, 2).ok);
    CHECK(h_shape_check(build_H(g1, 1), g1, 1).ok);
    CHECK(h_shape_check(build_H(g3, 2), g3, 2).ok);

    // a perturbed operator must fail and name the term
    auto bad = build_H(g2, 2) + DifferentialOperator::from_term(GradedPolynomial::constant(2, Rational(1)),
                                                                DerivMonomial::var(z_var(1), 2));
    auto rep = h_shape_check(bad, g2, 2);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("shape check on the recursion output, g = 2 and 3") {
    for (int g = 2; g <= 3; ++g) {
        GenusContext ctx(g);
        for (int k = 0; k <= 2 * g - 1; ++k) {
            auto h = h_part_of_Q(ctx, k);
            if (k >= 1) {
                auto rep = h_shape_check(h, ctx, k);
                CHECK_MESSAGE(rep.ok, "g=", g, " k=", k,
                              (rep.failures.empty() ? "" : rep.failures.front().c_str()));
            }
        }
    }
}

TEST_CASE("rational limits") {
    GenusContext g2(2);
    // hat_H agrees with the lambda -> 0 limit of the full tables
    for (int k = 0; k <= 2; ++k) {
        auto full = build_H(g2, k);
        DifferentialOperator limit(2);
        for (const auto& [d, c] : full.terms()) limit.add_term(d, lambda_zero_limit(c));
        CHECK(hat_H(g2, k) == limit);
    }
    // hat_H_2 at genus 2: (1/2) d1^2 + z1 d3
    auto expect = T(GradedPolynomial::constant(2, Rational(1, 2)), {1, 1}) + T(z_poly(g2, 1), {3});
    CHECK(hat_H(g2, 1) == expect);
}

TEST_CASE("Witt generators on the genus window") {
    GenusContext g2(2);
    auto one = GradedPolynomial::constant(2, Rational(1));
    CHECK(build_A(0, 2) == T(Rational(-1) * z_poly(g2, 1), {1}) + T(Rational(-3) * z_poly(g2, 3), {3}));
    CHECK(build_A(1, 2) == T(Rational(-1, 2) * one, {1, 1}) + T(Rational(-1) * z_poly(g2, 1), {3}));
    CHECK(build_A(3, 2) == T(Rational(-1, 2) * one, {3, 3}));

    // A_{2k} = -hat_H_{2k} on the window; A_0 = -hat_H_0 - g(g+1)/2
    for (int g = 1; g <= 4; ++g) {
        GenusContext ctx(g);
        for (int k = 1; k <= 2 * g - 1; ++k) CHECK(build_A(k, g) == -hat_H(ctx, k));
        CHECK(build_A(0, g) ==
              -hat_H(ctx, 0) - Rational(g * (g + 1), 2) * DifferentialOperator::identity(g));
    }
}

TEST_CASE("Witt relations") {
    auto rep = witt_check(4, 3);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front().c_str()));

    GenusContext g4(4);
    CHECK(commutator(build_A(1, 4), build_A(2, 4)) == Rational(2) * build_A(3, 4));
    CHECK(commutator(build_A(2, 4), build_A(2, 4)).is_zero());
    CHECK(commutator(build_A(0, 4), build_A(3, 4)) == Rational(6) * build_A(3, 4));
}

TEST_CASE("L bracket family") {
    GenusContext g2(2), g3(3);
    CHECK(l_bracket_check(g2, 1).ok);
    CHECK(l_bracket_check(g2, 2).ok);
    CHECK(l_bracket_check(g3, 2).ok);
}

TEST_CASE("Q brackets mirror the L brackets with the same coefficients") {
    for (int g = 2; g <= 4; ++g) {
        GenusContext ctx(g);
        auto q = build_Q_family(ctx, 2 * g - 1);
        for (int k = 1; k <= 2 * g - 2; ++k) {
            auto lhs = commutator(q[1], q[static_cast<std::size_t>(k)]);
            auto rhs = Rational(2 * (k - 1)) * q[static_cast<std::size_t>(k + 1)] +
                       Rational(4 * (2 * g - k), 2 * g + 1) *
                           (compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 2 * k + 2)),
                                    q[0]) -
                            compose(DifferentialOperator::multiplication(lambda_symbol(ctx, 4)),
                                    q[static_cast<std::size_t>(k - 1)]));
            CHECK(op_equal(lhs, rhs));
        }
    }
}
