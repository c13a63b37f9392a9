#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "hsf/ratlimit.hpp"
#include "hsf/sigma.hpp"

using namespace hsf;

namespace {

DifferentialOperator T(const GradedPolynomial& coeff, const std::vector<int>& zderivs) {
    DerivMonomial d;
    for (int b : zderivs) d = d.times_var(z_var(b), 1);
    return DifferentialOperator::from_term(coeff, d);
}

// first-order z-part of an H operator (the beta block)
DifferentialOperator first_order_z_part(const DifferentialOperator& op) {
    DifferentialOperator out(op.genus());
    for (const auto& [d, c] : op.terms())
        if (d.total_degree() == 1 && !d.contains_kind(VarKind::Lambda)) out.add_term(d, c);
    return out;
}

}  // namespace

TEST_CASE("sigma series reproduces the printed expansions") {
    auto s1 = sigma_series(1, 6);
    CHECK(s1.poly == golden::sigma1_series_weight6());

    auto s2 = sigma_series(2, 6);
    CHECK(s2.poly == golden::sigma2_series_weight6());
}

TEST_CASE("stratum zero is the rational limit") {
    for (int g = 1; g <= 3; ++g) {
        auto s = sigma_series(g, 0);
        CHECK(s.poly == solve_m(g).poly);
    }
}

TEST_CASE("heat residuals vanish in all computed strata") {
    for (int g = 2; g <= 3; ++g) {
        const int bound = g == 2 ? 6 : 4;
        GenusContext ctx(g);
        auto s = sigma_series(g, bound);
        for (int k = 0; k <= 2 * g - 1; ++k) {
            GradedPolynomial r = apply(build_Q(ctx, k), s.poly);
            for (int w : lambda_weights_present(r))
                if (w <= bound) CHECK(graded_component(r, w).is_zero());
        }
    }
}

TEST_CASE("wp and zeta on the rational limit") {
    TruncatedSeries g1{1, 0, solve_m(1).poly};
    auto p11 = wp(g1, {1, 1});
    CHECK(p11.num == GradedPolynomial::constant(1, Rational(1)));
    CHECK(p11.pow == 2);
    auto zeta1 = zeta(g1, 1);
    CHECK(zeta1.num == GradedPolynomial::constant(1, Rational(1)));
    CHECK(zeta1.pow == 1);

    TruncatedSeries g2{2, 0, solve_m(2).poly};
    auto p = wp(g2, {1, 1});
    GenusContext ctx(2);
    CHECK(p.num == Rational(3) * z_poly(ctx, 1, 4) + Rational(18) * (z_poly(ctx, 1) * z_poly(ctx, 3)));
    CHECK(p.pow == 2);

    // index permutations agree exactly
    auto a = wp(g2, {1, 1, 3});
    auto b = wp(g2, {1, 3, 1});
    auto c = wp(g2, {3, 1, 1});
    CHECK(ratio_zero(ratio_sub(g2.poly, a, b), std::nullopt));
    CHECK(ratio_zero(ratio_sub(g2.poly, a, c), std::nullopt));

    CHECK_THROWS_AS(wp(g2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(wp(g2, {1, 5}), std::invalid_argument);
}

TEST_CASE("KdV in the rational limit") {
    CHECK(kdv_check_rational(1).ok);
    CHECK(kdv_check_rational(2).ok);
    CHECK(kdv_check_rational(3).ok);
}

TEST_CASE("KdV on the truncated series") {
    CHECK(kdv_check_series(2, 4).ok);
    CHECK(kdv_check_series(3, 4).ok);
}

TEST_CASE("derivation tables, genus 1 and 2") {
    GenusContext g1(1);
    auto l0 = build_script_L(g1, 0);
    CHECK(l0.field == build_L(g1, 0) - T(z_poly(g1, 1), {1}));
    CHECK(l0.zeta_terms.empty());
    auto l2 = build_script_L(g1, 1);
    CHECK(l2.field == build_L(g1, 1));
    CHECK(l2.zeta_terms == std::vector<std::pair<int, int>>{{1, 1}});

    GenusContext g2(2);
    auto m0 = build_script_L(g2, 0);
    CHECK(m0.field == build_L(g2, 0) - T(z_poly(g2, 1), {1}) - T(Rational(3) * z_poly(g2, 3), {3}));
    auto m2 = build_script_L(g2, 1);
    CHECK(m2.field == build_L(g2, 1) + T(Rational(4, 5) * (lambda_symbol(g2, 4) * z_poly(g2, 3)), {1}) -
                          T(z_poly(g2, 1), {3}));
    CHECK(m2.zeta_terms == std::vector<std::pair<int, int>>{{1, 1}});
    auto m4 = build_script_L(g2, 2);
    CHECK(m4.field == build_L(g2, 2) + T(Rational(6, 5) * (lambda_symbol(g2, 6) * z_poly(g2, 3)), {1}) -
                          T(lambda_symbol(g2, 4) * z_poly(g2, 3), {3}));
    CHECK(m4.zeta_terms == (std::vector<std::pair<int, int>>{{3, 1}, {1, 3}}));
}

TEST_CASE("derivation tables, genus 3 and 4") {
    GenusContext g3(3);
    auto l2 = build_script_L(g3, 1);
    CHECK(l2.field == build_L(g3, 1) + T(Rational(8, 7) * (lambda_symbol(g3, 4) * z_poly(g3, 3)), {1}) -
                          T(z_poly(g3, 1) - Rational(4, 7) * (lambda_symbol(g3, 4) * z_poly(g3, 5)), {3}) -
                          T(Rational(3) * z_poly(g3, 3), {5}));
    auto l4 = build_script_L(g3, 2);
    CHECK(l4.field == build_L(g3, 2) + T(Rational(12, 7) * (lambda_symbol(g3, 6) * z_poly(g3, 3)), {1}) -
                          T(lambda_symbol(g3, 4) * z_poly(g3, 3) -
                                Rational(6, 7) * (lambda_symbol(g3, 6) * z_poly(g3, 5)),
                            {3}) -
                          T(z_poly(g3, 1) + Rational(3) * (lambda_symbol(g3, 4) * z_poly(g3, 5)), {5}));

    GenusContext g4(4);
    auto n2 = build_script_L(g4, 1);
    auto expect2 = build_L(g4, 1) - T(z_poly(g4, 1), {3}) - T(Rational(3) * z_poly(g4, 3), {5}) -
                   T(Rational(5) * z_poly(g4, 5), {7}) +
                   T(Rational(4, 3) * (lambda_symbol(g4, 4) * z_poly(g4, 3)), {1}) +
                   T(Rational(8, 9) * (lambda_symbol(g4, 4) * z_poly(g4, 5)), {3}) +
                   T(Rational(4, 9) * (lambda_symbol(g4, 4) * z_poly(g4, 7)), {5});
    CHECK(n2.field == expect2);
    auto n4 = build_script_L(g4, 2);
    auto expect4 = build_L(g4, 2) - T(z_poly(g4, 1), {5}) - T(Rational(3) * z_poly(g4, 3), {7}) -
                   T(lambda_symbol(g4, 4) * z_poly(g4, 3), {3}) -
                   T(Rational(3) * (lambda_symbol(g4, 4) * z_poly(g4, 5)), {5}) -
                   T(Rational(5) * (lambda_symbol(g4, 4) * z_poly(g4, 7)), {7}) +
                   T(Rational(2) * (lambda_symbol(g4, 6) * z_poly(g4, 3)), {1}) +
                   T(Rational(4, 3) * (lambda_symbol(g4, 6) * z_poly(g4, 5)), {3}) +
                   T(Rational(2, 3) * (lambda_symbol(g4, 6) * z_poly(g4, 7)), {5});
    CHECK(n4.field == expect4);
}

TEST_CASE("derivation field parts complement the H first-order blocks") {
    for (int g = 1; g <= 4; ++g) {
        GenusContext ctx(g);
        for (int k = 1; k <= std::min(2, 2 * g - 1); ++k) {
            auto sl = build_script_L(ctx, k);
            CHECK(sl.field == build_L(ctx, k) - first_order_z_part(build_H(ctx, k)));
        }
    }
}

TEST_CASE("Euler derivation measures the weight of wp") {
    auto series = sigma_series(2, 4);
    GenusContext ctx(2);
    auto l0 = build_script_L(ctx, 0);
    auto p11 = wp(series, {1, 1});
    auto lhs = apply_script_L(l0, series, p11);
    auto residual = ratio_sub(series.poly, lhs, ratio_scale(p11, Rational(2)));
    CHECK(ratio_zero(residual, 4));
    auto p13 = wp(series, {1, 3});
    auto r2 = ratio_sub(series.poly, apply_script_L(l0, series, p13), ratio_scale(p13, Rational(4)));
    CHECK(ratio_zero(r2, 4));
}

TEST_CASE("dynamical vector fields") {
    auto f2 = dyn_fields(2);
    GradedPolynomial d0_31(2);
    for (const auto& [ij, p] : f2.d0)
        if (ij == std::pair<int, int>{3, 1}) d0_31 = p;
    CHECK(d0_31 == Rational(4) * GradedPolynomial::from_var(2, x_var(3, 1)));

    GradedPolynomial d1_31(2);
    for (const auto& [ij, p] : f2.d1)
        if (ij == std::pair<int, int>{3, 1}) d1_31 = p;
    auto expect = Rational(12) * (GradedPolynomial::from_var(2, x_var(1, 1)) *
                                  GradedPolynomial::from_var(2, x_var(2, 1))) +
                  Rational(4) * GradedPolynomial::from_var(2, x_var(2, 3));
    CHECK(d1_31 == expect);

    // boundary x_{2,2g+1} = 0 at g = 1
    auto f1 = dyn_fields(1);
    GradedPolynomial b(1);
    for (const auto& [ij, p] : f1.d1)
        if (ij == std::pair<int, int>{3, 1}) b = p;
    CHECK(b == Rational(12) * (GradedPolynomial::from_var(1, x_var(1, 1)) *
                               GradedPolynomial::from_var(1, x_var(2, 1))));
}

TEST_CASE("S0 and S1 hold on the truncated series") {
    auto s0 = dyn_consistency_check(2, DynFlow::S0, 4);
    CHECK_MESSAGE(s0.ok, (s0.failures.empty() ? "" : s0.failures.front().c_str()));
    auto s1 = dyn_consistency_check(2, DynFlow::S1, 4);
    CHECK_MESSAGE(s1.ok, (s1.failures.empty() ? "" : s1.failures.front().c_str()));
}

TEST_CASE("S2 system and the lambda_4 identity at genus 3") {
    auto rep = dyn_consistency_check(3, DynFlow::S2, 4);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front().c_str()));
    CHECK_THROWS_AS(dyn_consistency_check(2, DynFlow::S2, 4), std::invalid_argument);
}
